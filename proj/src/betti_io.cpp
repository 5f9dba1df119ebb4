#include "syzygy/betti_table.hpp"

#include <sstream>

#include "json.hpp"

namespace syzygy {

std::string certification_label(Certification c) {
    switch (c) {
        case Certification::ExactFp: return "exact-Fp";
        case Certification::MultiPrimeChar0: return "multi-prime-char0";
        case Certification::ExactQ: return "exact-Q";
    }
    return "?";
}

std::string betti_to_json(const BettiTable& t) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["model"] = t.model_id;
    j["char"] = t.characteristic;
    j["certification"] = certification_label(t.certification);
    j["p_max"] = t.p_max;
    j["q_max"] = t.q_max;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [pq, v] : t.entries) {
        if (v == 0) continue;
        nlohmann::ordered_json e;
        e["p"] = pq.first;
        e["q"] = pq.second;
        e["v"] = v;
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

std::string betti_pretty(const BettiTable& t) {
    // column widths per p
    std::vector<std::size_t> width(t.p_max + 1, 1);
    for (int p = 0; p <= t.p_max; ++p) {
        width[p] = std::to_string(p).size();
        for (int q = 0; q <= t.q_max; ++q)
            width[p] = std::max(width[p], std::to_string(t.at(p, q)).size());
    }
    std::ostringstream os;
    os << "  ";
    for (int p = 0; p <= t.p_max; ++p) {
        os << ' ';
        std::string h = std::to_string(p);
        os << std::string(width[p] - h.size(), ' ') << h;
    }
    os << '\n';
    os << "--+";
    std::size_t total = 0;
    for (int p = 0; p <= t.p_max; ++p) total += width[p] + 1;
    os << std::string(total, '-') << '\n';
    for (int q = 0; q <= t.q_max; ++q) {
        os << q << " |";
        for (int p = 0; p <= t.p_max; ++p) {
            long v = t.at(p, q);
            std::string cell = v == 0 ? "-" : std::to_string(v);
            os << ' ' << std::string(width[p] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

std::string betti_to_csv(const BettiTable& t, long ms) {
    std::ostringstream os;
    os << "model,g,char,p,q,value,certification,ms\n";
    for (const auto& [pq, v] : t.entries) {
        os << t.model_id << ',' << t.g_or_degree << ',' << t.characteristic << ',' << pq.first << ','
           << pq.second << ',' << v << ',' << certification_label(t.certification) << ',' << ms
           << '\n';
    }
    return os.str();
}

}  // namespace syzygy
