#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "emnl/error.hpp"

namespace emnl {

// Sentinel index for a category that is absent from the vocabulary.
// It embeds as the zero vector and receives no gradient.
inline constexpr std::size_t kUnseenCategory = static_cast<std::size_t>(-1);

// Global index over the categories of all categorical variables. All variables
// share one joint embedding table: category (m, c) maps to offset(m) + local(c)
// in 0..Z-1, where offset(m) is the prefix sum of earlier variables' sizes.
// Labels within a variable are ordered by first observation.
class Vocabulary {
  public:
    std::size_t add_variable(const std::string& name) {
        for (const auto& v : vars_)
            if (v.name == name) throw ValidationError("duplicate categorical variable: " + name);
        vars_.push_back(Variable{name, {}, {}});
        return vars_.size() - 1;
    }

    // Registers the label if new; returns its global index.
    std::size_t add_category(std::size_t var, const std::string& label) {
        Variable& v = vars_.at(var);
        auto it = v.local.find(label);
        if (it == v.local.end()) {
            it = v.local.emplace(label, v.labels.size()).first;
            v.labels.push_back(label);
        }
        return offset(var) + it->second;
    }

    std::optional<std::size_t> lookup(std::size_t var, const std::string& label) const {
        const Variable& v = vars_.at(var);
        auto it = v.local.find(label);
        if (it == v.local.end()) return std::nullopt;
        return offset(var) + it->second;
    }

    std::size_t n_variables() const { return vars_.size(); }

    std::size_t total_categories() const {
        std::size_t z = 0;
        for (const auto& v : vars_) z += v.labels.size();
        return z;
    }

    std::size_t offset(std::size_t m) const {
        std::size_t off = 0;
        for (std::size_t i = 0; i < m; ++i) off += vars_.at(i).labels.size();
        return off;
    }

    const std::string& variable_name(std::size_t m) const { return vars_.at(m).name; }
    std::size_t n_categories(std::size_t m) const { return vars_.at(m).labels.size(); }
    const std::vector<std::string>& labels(std::size_t m) const { return vars_.at(m).labels; }

    std::optional<std::size_t> variable_index(const std::string& name) const {
        for (std::size_t m = 0; m < vars_.size(); ++m)
            if (vars_[m].name == name) return m;
        return std::nullopt;
    }

    // Inverse of the global index: which variable and label.
    std::size_t var_of(std::size_t global) const {
        std::size_t off = 0;
        for (std::size_t m = 0; m < vars_.size(); ++m) {
            off += vars_[m].labels.size();
            if (global < off) return m;
        }
        throw ValidationError("global category index out of range");
    }

    const std::string& label_of(std::size_t global) const {
        const std::size_t m = var_of(global);
        return vars_[m].labels.at(global - offset(m));
    }

    bool operator==(const Vocabulary& o) const {
        if (vars_.size() != o.vars_.size()) return false;
        for (std::size_t m = 0; m < vars_.size(); ++m) {
            if (vars_[m].name != o.vars_[m].name) return false;
            if (vars_[m].labels != o.vars_[m].labels) return false;
        }
        return true;
    }

  private:
    struct Variable {
        std::string name;
        std::vector<std::string> labels;
        std::unordered_map<std::string, std::size_t> local;
    };
    std::vector<Variable> vars_;
};

}  // namespace emnl
