#ifndef SYZYGY_DRIVER_HPP
#define SYZYGY_DRIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "syzygy/betti_table.hpp"
#include "syzygy/multilinear.hpp"

namespace syzygy {

struct ModelSpec {
    enum class Kind { RncTangent, Elliptic, Genus2 };
    Kind kind = Kind::RncTangent;
    int param = 3;  // g for tangent-rnc, d for elliptic, fixed 13 for genus2

    std::string id() const;
    long ambient_r() const;  // the projective dimension r of the embedding
    static ModelSpec parse(const std::string& id);
};

struct ComputeOptions {
    std::vector<std::uint64_t> proxy_primes{32003, 32009};
    std::uint64_t seed = 1;
    int jobs = 0;  // 0: hardware default capped at 8
    bool use_reduction = true;
    bool force_exact_q = false;  // char-0 values via exact rational elimination
    long exact_q_max_dim = 220;  // below this size char-0 ranks also get the exact certificate
    std::size_t stream_nnz_threshold = 25'000'000;
    std::string cache_dir;  // memoized graded pieces; empty disables
    int fiber_random_samples = 4;

    int effective_jobs() const;
};

struct CertifiedValue {
    long value = 0;
    Certification certification = Certification::ExactFp;
};

/// koszul_module_dim under the characteristic policy: exact F_p, or for char 0 the
/// verified multi-prime strategy with an exact fraction-free certificate below the
/// configured size threshold.
CertifiedValue koszul_module_dim_value(int g, int p, MapVariant variant, std::uint64_t characteristic,
                                       const ComputeOptions& opts);

/// Full Betti table of a model under the characteristic policy.  Large models are
/// evaluated through the certified linear-section reduction; every emitted table
/// passes the Hilbert-numerator consistency gate.
BettiTable compute_betti_table(const ModelSpec& spec, std::uint64_t characteristic,
                               const ComputeOptions& opts, int q_max = 3,
                               std::optional<int> p_max = std::nullopt);

/// Hilbert check (degrees 1..m_max) under the characteristic policy.
bool model_hilbert_check(const ModelSpec& spec, std::uint64_t characteristic,
                         const ComputeOptions& opts, int m_max);

long expected_hilbert_value(const ModelSpec& spec, int m);

struct SweepCell {
    std::string subject;  // model id or variant tag
    int g = 0;
    std::uint64_t characteristic = 0;
    int p = 0;
    int q = 0;
    long value = 0;
    std::string certification;
    long ms = 0;
};

struct Verdict {
    std::string gate;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<SweepCell> cells;
    std::vector<Verdict> verdicts;

    bool all_pass() const;
    void sort_cells();
    std::string to_json() const;
    std::string to_csv() const;
};

struct TheoremConfig {
    int g_min = 3;
    int g_max = 12;
    std::vector<std::uint64_t> characteristics;  // 0 allowed
    bool invert_expectation = false;             // negative-control fixture
    bool with_timings = false;
};

Report run_theorem(int which /*1 or 2*/, const TheoremConfig& cfg, const ComputeOptions& opts);

/// Sweep koszul_module_dim over a grid without verdicts.
Report run_sweep(const std::vector<int>& gs, const std::vector<std::uint64_t>& chars,
                 const std::vector<MapVariant>& variants, const ComputeOptions& opts);

/// Property-suite gates; empty selection runs all.
Report run_suite(const std::vector<std::string>& gates, const ComputeOptions& opts);
std::vector<std::string> suite_gate_names();

/// Human-readable dump of the Lemma-3.1 maps at one (p, variant, char).
std::string describe_maps(int p, MapVariant variant, std::uint64_t characteristic,
                          const ComputeOptions& opts, bool full_triplets);

}  // namespace syzygy

#endif
