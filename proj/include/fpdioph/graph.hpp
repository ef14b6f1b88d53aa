// The pair-compatibility graph on F_p^*: a ~ b iff ab+1 is a square
// (0 included). m-element sets with all pairwise products + 1 square are
// exactly the m-cliques; this header has the brute-force counters, the
// closed-form counts for m = 2, 3, 4, and constructive extension search.
#pragma once

#include "fpdioph/ff.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fpd {
namespace dioph {

using ff::i64;
using ff::u64;

struct InvalidTuple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonIntegralCount : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// adjacency rows as bitsets, vertex v in 1..p-1 <-> bit v-1
class DiophGraph {
  public:
    explicit DiophGraph(const ff::PrimeContext& ctx);

    const ff::PrimeContext& ctx() const { return *ctx_; }
    u64 p() const { return ctx_->p(); }
    u64 vertices() const { return p() - 1; }
    int words() const { return words_; }
    const u64* row(u64 v) const { return bits_.data() + (v - 1) * (u64)words_; }
    bool adjacent(u64 a, u64 b) const {
        return (row(a)[(b - 1) >> 6] >> ((b - 1) & 63)) & 1;
    }
    i64 edge_count() const;

  private:
    const ff::PrimeContext* ctx_;
    int words_;
    std::vector<u64> bits_;
};

struct TupleCountRecord {
    u64 p;
    int m;
    i64 count;
    std::string method;  // "brute" or "formula"
};

i64 count_cliques(const DiophGraph& g, int m);
TupleCountRecord count_tuples(const DiophGraph& g, int m);
// lexicographically first tuples, ascending entries; limit < 0 means all
std::vector<std::vector<u64>> enumerate_tuples(const DiophGraph& g, int m, i64 limit);
// streaming visit in the same order; return false from the sink to stop
void for_each_tuple(const DiophGraph& g, int m,
                    const std::function<bool(const std::vector<u64>&)>& sink);

// closed forms; n4 needs the combined weight-3/weight-5 coefficient q(p)
i64 n2_formula(u64 p);
i64 n3_formula(u64 p);
i64 n4_formula(u64 p, i64 q_value);  // NonIntegralCount if 1536 does not divide

bool is_diophantine_tuple(const ff::PrimeContext& ctx, const std::vector<u64>& t);

// smallest x in F_p^* extending the tuple, absent if none
std::optional<u64> greedy_extend(const DiophGraph& g, const std::vector<u64>& tuple);

// number of x in F_p with legendre(a_i x + 1) = +1 for every entry
i64 count_extensions(const ff::PrimeContext& ctx, const std::vector<u64>& tuple);

// character-sum lower bound for count_extensions: p/2^m - ((m-2)/2 + 1/2^m) sqrt(p) - m/2,
// with sqrt(p) rounded up so the bound stays conservative
ff::Rational weil_extension_bound(u64 p, int m);

// guaranteed nonempty whenever p > 2^(2m-2) m^2; best effort below that
std::optional<std::vector<u64>> construct_tuple(const ff::PrimeContext& ctx, int m);

// rational tuples usable as reduction seeds mod p
struct SeedTuple {
    std::vector<std::pair<i64, i64>> entries;  // numerator, denominator
};
const std::vector<SeedTuple>& seed_tuples(int m);  // m in 2..6

// entrywise n * d^-1 mod p; absent on zero denominators, zero images
// or collisions. The result is sorted; callers check the pair property.
std::optional<std::vector<u64>> reduce_seed_tuple(const SeedTuple& seed, const ff::PrimeContext& ctx);

}  // namespace dioph
}  // namespace fpd
