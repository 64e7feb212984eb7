#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace charsub {

/**
 * A set of block indices (natural numbers >= 1).
 *
 * Two flavours exist:
 *  - explicit sets: a finite, strictly increasing list; exact.
 *  - predicate sets: membership given by a predicate together with an
 *    enumeration horizon. A predicate set stands for an infinite set
 *    whose members can only be enumerated up to the horizon; queries
 *    beyond the horizon throw instead of guessing.
 *
 * Shifting by +/-1 produces the sets A+1 and A-1 (elements below 1 are
 * dropped). Values are immutable; copies are cheap.
 */
class IndexSet {
  public:
    static IndexSet explicit_set(std::vector<std::int64_t> elements, std::string label = "");

    static IndexSet predicate_set(std::string label,
                                  std::function<bool(std::int64_t)> pred,
                                  std::int64_t horizon);

    static IndexSet empty() { return explicit_set({}, "empty"); }

    // All indices in [1, horizon] and (conceptually) beyond.
    static IndexSet all(std::int64_t horizon) {
        return predicate_set("all", [](std::int64_t) { return true; }, horizon);
    }

    // The set {n + delta : n in this}, delta in {+1, -1}.
    IndexSet shifted(int delta) const;

    bool contains(std::int64_t n) const;

    // Sorted members of the set intersected with [lo, hi].
    std::vector<std::int64_t> elements_in(std::int64_t lo, std::int64_t hi) const;

    // Explicit sets are exact finite sets; predicate sets model infinite ones.
    bool is_explicit() const { return impl_->explicit_kind; }

    std::int64_t horizon() const { return impl_->horizon; }
    const std::string& label() const { return impl_->label; }

  private:
    struct Impl {
        bool explicit_kind = true;
        std::vector<std::int64_t> elements;           // explicit sets
        std::function<bool(std::int64_t)> predicate;  // predicate sets
        std::int64_t horizon = 0;
        std::string label;
    };

    explicit IndexSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

}  // namespace charsub
