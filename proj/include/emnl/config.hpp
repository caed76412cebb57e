#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emnl/error.hpp"

namespace emnl {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Comma-separated list, items trimmed. Empty string -> empty list.
inline std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(value);
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    if (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

inline double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("expected a number for " + what + ", got '" + s + "'");
    }
}

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ConfigError("expected an integer for " + what + ", got '" + s + "'");
    return v;
}

inline bool parse_bool(const std::string& s, const std::string& what) {
    if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
    if (s == "false" || s == "no" || s == "0" || s == "off") return false;
    throw ConfigError("expected true/false for " + what + ", got '" + s + "'");
}

// One [section] of a key-value config file. Entry order is preserved; the
// schema and experiment formats give meaning to that order.
struct ConfigSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }

    std::string get(const std::string& key, const std::string& fallback) const {
        const std::string* v = find(key);
        return v ? *v : fallback;
    }

    std::string require(const std::string& key) const {
        const std::string* v = find(key);
        if (!v) throw ConfigError("missing key '" + key + "' in section [" + name + "]");
        return *v;
    }

    bool has(const std::string& key) const { return find(key) != nullptr; }
};

struct ConfigFile {
    std::vector<ConfigSection> sections;

    ConfigSection* find(const std::string& name) {
        for (auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }
    const ConfigSection* find(const std::string& name) const {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }
    const ConfigSection& require(const std::string& name) const {
        const ConfigSection* s = find(name);
        if (!s) throw ConfigError("missing section [" + name + "]");
        return *s;
    }
    ConfigSection& get_or_create(const std::string& name) {
        if (ConfigSection* s = find(name)) return *s;
        sections.push_back(ConfigSection{name, {}});
        return sections.back();
    }

    static ConfigFile parse_string(const std::string& text) {
        ConfigFile cfg;
        ConfigSection* current = nullptr;
        std::stringstream ss(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(ss, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const std::string t = trim(line);
            if (t.empty() || t[0] == '#' || t[0] == ';') continue;
            if (t.front() == '[') {
                if (t.back() != ']')
                    throw ConfigError("line " + std::to_string(lineno) + ": malformed section header '" + t + "'");
                cfg.sections.push_back(ConfigSection{trim(t.substr(1, t.size() - 2)), {}});
                current = &cfg.sections.back();
                continue;
            }
            const std::size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value', got '" + t + "'");
            if (!current) {
                cfg.sections.push_back(ConfigSection{"", {}});
                current = &cfg.sections.back();
            }
            current->entries.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
        }
        return cfg;
    }

    static ConfigFile parse_file(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ConfigError("cannot open config file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return parse_string(buf.str());
        } catch (const ConfigError& e) {
            throw ConfigError(path + ": " + e.what());
        }
    }

    std::string serialize() const {
        std::string out;
        for (const auto& s : sections) {
            if (!s.name.empty()) out += "[" + s.name + "]\n";
            for (const auto& [k, v] : s.entries) out += k + " = " + v + "\n";
            out += "\n";
        }
        return out;
    }

    bool operator==(const ConfigFile& o) const {
        if (sections.size() != o.sections.size()) return false;
        for (std::size_t i = 0; i < sections.size(); ++i) {
            if (sections[i].name != o.sections[i].name) return false;
            if (sections[i].entries != o.sections[i].entries) return false;
        }
        return true;
    }
};

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

inline std::uint64_t hash_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file for hashing: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return fnv1a64(buf.str());
}

}  // namespace emnl
