#pragma once

#include <charsub/index_set.hpp>
#include <charsub/rational.hpp>

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace charsub {

struct ConstantTail {
    std::int64_t value;
};
struct PeriodicTail {
    std::vector<std::int64_t> values;
};
// q_k = slope * k + offset for k past the prefix.
struct AffineTail {
    std::int64_t slope;
    std::int64_t offset;
};
using RatioTail = std::variant<ConstantTail, PeriodicTail, AffineTail>;

/**
 * The ratio sequence (q_n) of an arithmetic sequence, given as an
 * explicit prefix followed by a tail rule. Every ratio is >= 2, which
 * makes the running products a_n = q_1 ... q_n (with a_0 = 1) a strictly
 * increasing divisor chain.
 */
class RatioStream {
  public:
    RatioStream(std::vector<std::int64_t> prefix, RatioTail tail);

    // q_n for n >= 1.
    std::int64_t ratio(std::int64_t n) const;

    // a_n = q_1 ... q_n; a_0 = 1 (empty product).
    Int term(std::int64_t n) const;

    std::int64_t prefix_size() const { return static_cast<std::int64_t>(prefix_.size()); }
    const std::vector<std::int64_t>& prefix() const { return prefix_; }
    const RatioTail& tail() const { return tail_; }

    // True when every ratio is bounded (constant/periodic tail, or an
    // affine tail with zero slope).
    bool bounded() const;

    // Largest ratio value over all n; only valid for bounded streams.
    std::int64_t ratio_bound() const;

    // Length of the repeating pattern of tail ratios (1 for constant);
    // affine tails have no finite pattern and report 0.
    std::int64_t tail_period() const;

    bool operator==(const RatioStream& other) const;

  private:
    std::vector<std::int64_t> prefix_;
    RatioTail tail_;
};

// Incremental a_n products; advance() is O(one multiply).
class TermCursor {
  public:
    explicit TermCursor(const RatioStream& s) : stream_(&s), index_(0), value_(1) {}

    std::int64_t index() const { return index_; }
    const Int& value() const { return value_; }  // a_index

    void advance() {
        ++index_;
        value_ *= stream_->ratio(index_);
    }

  private:
    const RatioStream* stream_;
    std::int64_t index_;
    Int value_;
};

struct FullRule {};
struct BaseOnlyRule {};
struct GapThirdRule {};
struct ExplicitRule {
    // Must cover blocks 1..K contiguously.
    std::map<std::int64_t, std::vector<std::int64_t>> blocks;
};
using MultiplierRule = std::variant<FullRule, BaseOnlyRule, GapThirdRule, ExplicitRule>;

/**
 * An arithmetic-type sequence: per block k a sorted set of multipliers
 * R_k inside [1, q_k - 1] with 1 always present. Block k contributes
 * the terms { r * a_{k-1} : r in R_k }; flattening the blocks in order
 * gives the strictly increasing sequence (e_n).
 *
 * Flat indices are 1-based. With n_k = |R_1| + ... + |R_k| (n_0 = 0),
 * block k occupies the flat interval [n_{k-1} + 1, n_k], and the first
 * term of block k is a_{k-1} itself.
 */
class MultiplierSchedule {
  public:
    MultiplierSchedule(RatioStream base, MultiplierRule rule);

    const RatioStream& base() const { return base_; }
    const MultiplierRule& rule() const { return rule_; }

    std::int64_t block_size(std::int64_t k) const;

    // r^k_i for i in [1, block_size(k)].
    std::int64_t multiplier(std::int64_t k, std::int64_t i) const;

    std::vector<std::int64_t> multipliers(std::int64_t k) const;

    // e_n.
    Int flat_term(std::int64_t n) const;

    // (k, i) with e_n = r^k_i * a_{k-1}.
    std::pair<std::int64_t, std::int64_t> block_of(std::int64_t n) const;

    // n_{k-1} + 1, the flat index of the first term of block k.
    std::int64_t block_start(std::int64_t k) const;

    // Highest block the rule can produce (explicit rules are finite).
    std::int64_t blocks_covered() const;

    bool rule_is(const char* name) const;

  private:
    RatioStream base_;
    MultiplierRule rule_;
};

// Walks the flattened sequence e_1, e_2, ... of a schedule.
class FlatCursor {
  public:
    explicit FlatCursor(const MultiplierSchedule& m);

    std::int64_t flat() const { return flat_; }
    std::int64_t block() const { return block_; }
    std::int64_t index_in_block() const { return index_; }
    std::int64_t multiplier() const { return mult_; }
    const Int& base_term() const { return base_term_; }  // a_{block-1}
    Int value() const { return mult_ * base_term_; }     // e_flat

    void advance();

  private:
    const MultiplierSchedule* schedule_;
    std::int64_t flat_, block_, index_, size_, mult_;
    Int base_term_;
};

enum class QClass { QBounded, QDivergent, Inconclusive };

struct Classification {
    QClass kind = QClass::Inconclusive;
    std::int64_t observed_min = 0;  // over sampled window elements
    std::int64_t observed_max = 0;
    std::string reason;
};

/**
 * Classify an index set against a ratio stream. Exact answers:
 *  - any set over a bounded stream is q-bounded;
 *  - an explicit (finite) set is q-bounded;
 *  - a predicate set over a divergent affine tail is q-divergent,
 *    provided it still has members in the upper half of [1, horizon]
 *    (predicate sets model infinite sets; an empty upper window makes
 *    that model unverifiable, hence Inconclusive).
 */
Classification classify(const IndexSet& A, const RatioStream& s, std::int64_t horizon);

// L(A): the flat indices covered by the blocks in A, as an explicit set.
IndexSet block_cover(const MultiplierSchedule& m, const IndexSet& A);

/**
 * The bounded-ratio characterizing schedule of a divisor chain
 * a_1 | a_2 | ... (each order > 1, strictly increasing, proper
 * divisibility). Returns the Full schedule over the chain's ratio
 * stream; the finite chain is extended by constant ratio 2. The
 * flattened sequence has consecutive-term ratio <= 2 everywhere.
 */
MultiplierSchedule characterizing_schedule(const std::vector<Int>& orders);

}  // namespace charsub
