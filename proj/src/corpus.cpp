#include "bandprime/corpus.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bandprime/error.hpp"

namespace bandprime {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                fields.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.emplace_back();
        } else if (ch != '\r') {
            fields.back() += ch;
        }
    }
    if (quoted) throw ParseError("unterminated quote on corpus line " + std::to_string(line_no));
    return fields;
}

template <class T>
std::optional<T> number_field(const std::string& s, const std::string& what) {
    if (s.empty()) return std::nullopt;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<T>(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad " + what + " value '" + s + "'");
    }
}

}  // namespace

std::vector<CorpusEntry> read_corpus_csv(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string line;
    std::map<std::string, std::size_t> col;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto f = split_csv_line(line, line_no);
        if (col.empty()) {
            for (std::size_t i = 0; i < f.size(); ++i) col[f[i]] = i;
            if (!col.count("name") || !col.count("pd")) throw ParseError("corpus header must name 'name' and 'pd'");
            continue;
        }
        auto get = [&](const char* key) -> std::string {
            auto it = col.find(key);
            return it != col.end() && it->second < f.size() ? f[it->second] : std::string{};
        };
        CorpusEntry e;
        e.name = get("name");
        e.pd = get("pd");
        e.sigma = number_field<int>(get("sigma"), "sigma");
        e.det = number_field<long long>(get("det"), "det");
        if (auto a = get("alexander"); !a.empty()) e.alexander = a;
        e.genus = number_field<int>(get("genus"), "genus");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> read_corpus_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid corpus JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("corpus JSON must be an array");
    std::vector<CorpusEntry> out;
    for (const auto& o : j) {
        if (!o.is_object() || !o.contains("name") || !o.contains("pd"))
            throw ParseError("corpus JSON entries need 'name' and 'pd'");
        CorpusEntry e;
        e.name = o.at("name").get<std::string>();
        e.pd = o.at("pd").is_string() ? o.at("pd").get<std::string>() : o.at("pd").dump();
        if (o.contains("sigma")) e.sigma = o.at("sigma").get<int>();
        if (o.contains("det")) e.det = o.at("det").get<long long>();
        if (o.contains("alexander")) e.alexander = o.at("alexander").get<std::string>();
        if (o.contains("genus")) e.genus = o.at("genus").get<int>();
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file " + path);
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return json ? read_corpus_json(in) : read_corpus_csv(in);
}

}  // namespace bandprime
