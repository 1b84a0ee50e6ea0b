#ifndef PHYLOTORIC_RING_HPP
#define PHYLOTORIC_RING_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "phylotoric/errors.hpp"

namespace phylotoric {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A polynomial ring over Q, identified by its ordered list of variable names.
// Rings are immutable and shared; equality is by variable list, so two
// independently built rings with the same variables are interchangeable.
class Ring {
public:
    static RingPtr make(std::vector<std::string> vars) {
        return std::shared_ptr<const Ring>(new Ring(std::move(vars)));
    }

    std::size_t nvars() const { return vars_.size(); }
    const std::string& var_name(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string>& vars() const { return vars_; }

    // -1 when the name is unknown.
    int var_index(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : static_cast<int>(it->second);
    }

    bool same_as(const Ring& other) const { return vars_ == other.vars_; }

    // Human-readable difference of variable sets, used in mismatch errors.
    std::string diff(const Ring& other) const;

private:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].empty()) throw DomainError("empty variable name");
            if (!index_.emplace(vars_[i], i).second)
                throw DomainError("duplicate variable name '" + vars_[i] + "'");
        }
    }

    std::vector<std::string> vars_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (a == b) return;
    if (a && b && a->same_as(*b)) return;
    std::string msg = std::string("ring mismatch in ") + op;
    if (a && b) msg += ": " + a->diff(*b);
    throw DomainError(msg);
}

} // namespace phylotoric

#endif
