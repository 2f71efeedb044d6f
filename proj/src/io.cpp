#include "latq/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace latq {

namespace {

SymGram gram_from_entries(int n, const std::vector<std::vector<Int>>& rows) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("asymmetric matrix: entries (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") and (" + std::to_string(j + 1) + "," +
                                            std::to_string(i + 1) + ") differ");
    SymGram g{std::move(m)};
    if (g.is_degenerate()) throw std::invalid_argument("degenerate matrix: determinant is zero");
    return g;
}

SymGram parse_gram_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid structured input: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("gram"))
        throw std::invalid_argument("structured input requires fields \"n\" and \"gram\"");
    if (!j["n"].is_number_integer()) throw std::invalid_argument("field \"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("field \"n\" must be positive");
    if (!j["gram"].is_array() || static_cast<int>(j["gram"].size()) != n)
        throw std::invalid_argument("field \"gram\" must be an n-row array");
    std::vector<std::vector<Int>> rows(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j["gram"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("gram row " + std::to_string(i + 1) + ": expected " +
                                        std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k) {
            if (row[k].is_number_integer()) {
                rows[i].push_back(to_int(row[k].get<long long>()));
            } else if (row[k].is_string()) {
                try {
                    rows[i].push_back(Int(row[k].get<std::string>()));
                } catch (const std::invalid_argument&) {
                    throw std::invalid_argument("gram row " + std::to_string(i + 1) + ", entry " +
                                                std::to_string(k + 1) + ": expected an integer");
                }
            } else {
                throw std::invalid_argument("gram row " + std::to_string(i + 1) + ", entry " +
                                            std::to_string(k + 1) + ": expected an integer");
            }
        }
    }
    return gram_from_entries(n, rows);
}

SymGram parse_gram_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("empty input");
    int n = 0;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n) || (ls >> extra))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected the rank alone");
        if (n < 1) throw std::invalid_argument("line " + std::to_string(lineno) + ": rank must be positive");
    }
    std::vector<std::vector<Int>> rows(n);
    for (int i = 0; i < n; ++i) {
        if (!next_line())
            throw std::invalid_argument("unexpected end of input: expected " + std::to_string(n) + " rows");
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                rows[i].push_back(Int(tok));
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": \"" + tok +
                                            "\" is not an integer");
            }
        }
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                                        " entries, got " + std::to_string(rows[i].size()));
    }
    return gram_from_entries(n, rows);
}

}  // namespace

SymGram parse_gram(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty input");
    if (text[first] == '{') return parse_gram_json(text);
    return parse_gram_text(text);
}

SymGram load_gram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_gram(ss.str());
}

nlohmann::json gram_to_json(const SymGram& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < g.rank(); ++j) {
            const Int& e = g.at(i, j);
            if (e.fits_slong_p())
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string scalar_str(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit_text(const nlohmann::json& node, std::ostream& out, int indent) {
    const std::string pad(indent, ' ');
    for (auto it = node.begin(); it != node.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object()) {
            out << pad << it.key() << ":\n";
            emit_text(v, out, indent + 2);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            // table: one line per row, aligned columns
            std::vector<std::string> keys;
            for (auto f = v.front().begin(); f != v.front().end(); ++f) keys.push_back(f.key());
            std::vector<size_t> width(keys.size());
            for (size_t c = 0; c < keys.size(); ++c) {
                width[c] = keys[c].size();
                for (const auto& row : v)
                    width[c] = std::max(width[c], scalar_str(row.at(keys[c])).size());
            }
            out << pad << it.key() << ":\n";
            out << pad << "  ";
            for (size_t c = 0; c < keys.size(); ++c) {
                out << keys[c] << std::string(width[c] - keys[c].size() + 2, ' ');
            }
            out << "\n";
            for (const auto& row : v) {
                out << pad << "  ";
                for (size_t c = 0; c < keys.size(); ++c) {
                    std::string s = scalar_str(row.at(keys[c]));
                    out << s << std::string(width[c] - s.size() + 2, ' ');
                }
                out << "\n";
            }
        } else if (v.is_array()) {
            out << pad << it.key() << ": " << v.dump() << "\n";
        } else {
            out << pad << it.key() << ": " << scalar_str(v) << "\n";
        }
    }
}

}  // namespace

std::string emit(const nlohmann::json& report, const std::string& format) {
    if (format == "json") return report.dump() + "\n";
    if (format != "text") throw std::invalid_argument("format must be text or json");
    std::ostringstream out;
    emit_text(report, out, 0);
    return out.str();
}

}  // namespace latq
