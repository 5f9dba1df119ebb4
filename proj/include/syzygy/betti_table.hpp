#ifndef SYZYGY_BETTI_TABLE_HPP
#define SYZYGY_BETTI_TABLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace syzygy {

enum class Certification { ExactFp, MultiPrimeChar0, ExactQ };

std::string certification_label(Certification c);

/// The (p, q) -> kappa_{p,q} grid with its provenance.
struct BettiTable {
    std::string model_id;
    long g_or_degree = 0;
    std::uint64_t characteristic = 0;  // as reported: 0 for proxy-certified char-0 runs
    Certification certification = Certification::ExactFp;
    int p_max = 0;
    int q_max = 0;
    std::map<std::pair<int, int>, long> entries;  // every computed cell, zeros included

    long at(int p, int q) const {
        auto it = entries.find({p, q});
        return it == entries.end() ? 0 : it->second;
    }
    bool has(int p, int q) const { return entries.count({p, q}) > 0; }

    bool same_values(const BettiTable& other) const {
        return p_max == other.p_max && q_max == other.q_max && entries == other.entries;
    }
};

/// JSON in the stable schema {"schema":1,"model":...,"char":...,"certification":...,"entries":[...]}
/// with nonzero entries sorted by (p, q).
std::string betti_to_json(const BettiTable& t);

/// Text table in the layout of the printed Betti tables: rows q = 0..3, "-" for zero.
std::string betti_pretty(const BettiTable& t);

/// CSV rows "model,g,char,p,q,value,certification,ms" for every computed cell.
std::string betti_to_csv(const BettiTable& t, long ms = 0);

}  // namespace syzygy

#endif
