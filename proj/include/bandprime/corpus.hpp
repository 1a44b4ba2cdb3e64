#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bandprime {

struct CorpusEntry {
    std::string name;
    std::string pd;
    std::optional<int> sigma;
    std::optional<long long> det;
    std::optional<std::string> alexander;  // compact "exp:coef;..." form
    std::optional<int> genus;
};

/// CSV with a header row naming at least `name` and `pd`; fields may be double-quoted.
std::vector<CorpusEntry> read_corpus_csv(std::istream& in);
/// JSON array of objects with the same field names.
std::vector<CorpusEntry> read_corpus_json(std::istream& in);
/// Dispatches on the file extension (.json, otherwise CSV).
std::vector<CorpusEntry> load_corpus(const std::string& path);

}  // namespace bandprime
