// unityf: batch CLI over the exact-arithmetic engines. Subcommands:
//   power-sums     a_c tables over divisor systems or explicit exponent sets
//   check-theorem  exhaustive/sampled verification (--which filter | roots)
//   fourier        enumerate | verify | partner | brute on {0,1}-idempotents
//   grpeq          enumerate | verify | bridge for the group-equation system
//
// Exit codes: 0 success, 1 mathematical counterexample found, 2 usage or cap
// error. Reports are deterministic for fixed --seed across any --jobs value;
// wall_ms is the only field that may differ between runs.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unityf/cyclotomic.hpp"
#include "unityf/divlattice.hpp"
#include "unityf/errors.hpp"
#include "unityf/fourierpairs.hpp"
#include "unityf/grpeq.hpp"
#include "unityf/parallel.hpp"
#include "unityf/report.hpp"
#include "unityf/rootset.hpp"
#include "unityf/setfilter.hpp"

namespace {

using nlohmann::json;
using namespace unityf;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string join64(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

/// UNITY_FILTERS_CAP_OVERRIDE: optional integer raising enumeration caps
/// (filter-theorem ground size up to 16, fourier exhaustive order up to 5).
std::int64_t cap_override() {
    const char* env = std::getenv("UNITY_FILTERS_CAP_OVERRIDE");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const std::int64_t v = std::strtoll(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 0)
        throw InvalidInput("UNITY_FILTERS_CAP_OVERRIDE must be a nonnegative integer");
    return v;
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * (1.0 / 9007199254740992.0);
}

/// Strictly positive weights in [0.25, 3), a pure function of the seed.
std::vector<double> random_weights(const GroundSet& ground, std::uint64_t seed) {
    std::vector<double> w;
    SplitMix64 rng = keyed_rng(seed, 0xA70B5u);
    for (int i = 0; i < ground.size(); ++i) w.push_back(0.25 + 2.75 * unit_double(rng.next()));
    return w;
}

json report_to_json(const std::string& command, const CheckReport& r, std::int64_t wall_ms) {
    json j;
    j["command"] = command;
    j["tested"] = r.tested;
    j["filters"] = r.filters;
    j["passed"] = r.tested - r.failed;
    j["failed"] = r.failed;
    j["counterexamples"] = r.counterexamples;
    j["wall_ms"] = wall_ms;
    return j;
}

void print_report_text(const std::string& command, const CheckReport& r, std::int64_t wall_ms) {
    std::cout << "command: " << command << "\n"
              << "tested: " << r.tested << "\n"
              << "filters: " << r.filters << "\n"
              << "passed: " << (r.tested - r.failed) << "\n"
              << "failed: " << r.failed << "\n";
    for (const auto& c : r.counterexamples) std::cout << "counterexample: " << c << "\n";
    std::cout << "wall_ms: " << wall_ms << "\n";
}

int emit_report(bool json_out, const std::string& command, const CheckReport& r,
                std::int64_t wall_ms) {
    if (json_out) std::cout << report_to_json(command, r, wall_ms).dump(2) << "\n";
    else print_report_text(command, r, wall_ms);
    return r.passed() ? 0 : 1;
}

// ---------------------------------------------------------------- power-sums

int run_power_sums(bool json_out, std::int64_t n, const std::vector<std::int64_t>& divs,
                   const std::vector<std::int64_t>& exps, bool all_c,
                   std::optional<std::int64_t> c_opt) {
    if (divs.empty() == exps.empty())
        throw InvalidInput("power-sums: give exactly one of --divisors or --exponents");
    const Modulus m(n);
    std::string command = "power-sums --n " + std::to_string(n);

    if (!divs.empty()) {
        const DivisorSystem sys(m, divs);
        command += " --divisors " + join64(sys.e);
        std::vector<std::int64_t> cs;
        if (c_opt && !all_c) {
            cs.push_back(*c_opt);
            command += " --c " + std::to_string(*c_opt);
        } else {
            cs = divisors(n);
            command += " --all-c";
        }
        json values = json::array();
        for (std::int64_t c : cs) {
            const std::int64_t a = power_sum(sys, c);
            if (json_out) values.push_back({{"c", c}, {"a", a}});
            else std::cout << "a_" << c << " = " << a << "\n";
        }
        if (json_out)
            std::cout << json{{"command", command}, {"n", n}, {"E", sys.e}, {"values", values}}
                             .dump(2)
                      << "\n";
        return 0;
    }

    const ExplicitRootSet u(m, exps);
    command += " --exponents " + join64(u.exponents);
    std::vector<std::int64_t> ks;
    if (c_opt && !all_c) {
        ks.push_back(*c_opt);
        command += " --c " + std::to_string(*c_opt);
    } else {
        for (std::int64_t k = 0; k < n; ++k) ks.push_back(k);
    }
    json values = json::array();
    for (std::int64_t k : ks) {
        const CyclotomicElement a = power_sum_explicit(u, k);
        const auto v = a.as_integer();
        if (json_out) {
            json row{{"k", k}, {"re", a.real_part()}, {"im", a.imag_part()}};
            if (v) row["integer"] = *v;
            else row["integer"] = nullptr;
            values.push_back(row);
        } else if (v) {
            std::cout << "a_" << k << " = " << *v << "\n";
        } else {
            std::cout << "a_" << k << " = not a rational integer (re=" << a.real_part()
                      << ", im=" << a.imag_part() << ")\n";
        }
    }
    if (json_out)
        std::cout << json{{"command", command},
                          {"n", n},
                          {"exponents", u.exponents},
                          {"values", values}}
                         .dump(2)
                  << "\n";
    return 0;
}

// ------------------------------------------------------------- check-theorem

int run_check_filter(bool json_out, int jobs, std::uint64_t seed, int size,
                     std::vector<double> weights, const std::vector<std::uint64_t>& system,
                     std::uint64_t samples) {
    const GroundSet ground(size);
    std::string command = "check-theorem --which filter --size " + std::to_string(size);
    if (weights.empty()) {
        weights = random_weights(ground, seed);
        command += " --seed " + std::to_string(seed);
    } else {
        command += " --weights <given>";
    }
    const AtomWeights mu(ground, weights);
    Timer timer;
    CheckReport report;

    if (!system.empty()) {
        std::vector<SubsetMask> members;
        for (std::uint64_t m : system) members.push_back(static_cast<SubsetMask>(m));
        const SetSystem sys(ground, members);
        command += " --system " + [&] {
            std::string s;
            for (std::size_t i = 0; i < sys.members.size(); ++i)
                s += (i ? "," : "") + std::to_string(sys.members[i]);
            return s;
        }();
        const bool filter = is_filter(sys).has_value();
        bool nonneg = true;
        for (SubsetMask c = 0;; c = (c - ground.mask) & ground.mask) {
            if (alt_sum(sys, mu, c) < -alt_sum_tolerance(sys, mu, c)) { nonneg = false; break; }
            if (c == ground.mask) break;
        }
        report.tested = 1;
        report.filters = filter ? 1 : 0;
        if (filter != nonneg)
            report.add_failure(std::string("system is ") + (filter ? "a filter" : "not a filter") +
                               " but a_C " + (nonneg ? "are all nonnegative" : "go negative"));
        return emit_report(json_out, command, report, timer.ms());
    }

    if (size > kMaxExhaustiveGroundSize) command += " --samples " + std::to_string(samples);
    const int max_ground =
        cap_override() > 0 ? static_cast<int>(std::min<std::int64_t>(cap_override(), 16))
                           : kMaxSampledGroundSize;
    report = check_filter_theorem(ground, mu, jobs, samples, seed, max_ground);
    return emit_report(json_out, command, report, timer.ms());
}

int run_check_roots(bool json_out, int jobs, std::int64_t n) {
    const std::string command = "check-theorem --which roots --n " + std::to_string(n);
    Timer timer;
    const CheckReport report = check_roots_theorem(Modulus(n), jobs);
    return emit_report(json_out, command, report, timer.ms());
}

// -------------------------------------------------------------------- fourier

json matrix_to_json(const BinaryMatrix& m) {
    return json{{"n", m.n.value}, {"rows", m.rows()}};
}

BinaryMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open matrix file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    // Accept either the JSON form {"n":..,"rows":[..]} or the plain text form.
    if (!text.empty() && text.front() == '{') {
        const json j = json::parse(text);
        return BinaryMatrix::from_rows(j.at("n").get<std::int64_t>(),
                                       j.at("rows").get<std::vector<std::string>>());
    }
    return BinaryMatrix::parse_text(text);
}

std::int64_t effective_exhaustive_cap(std::int64_t requested) {
    std::int64_t cap = requested > 0 ? requested : kDefaultExhaustiveOrder;
    if (cap_override() > 0) cap = std::max(cap, std::min(cap_override(), kMaxExhaustiveOrder));
    return std::min(cap, kMaxExhaustiveOrder);
}

int run_fourier_enumerate(bool json_out, int jobs, std::int64_t n, const std::string& mode,
                          std::int64_t max_exhaustive) {
    const std::string command =
        "fourier enumerate --n " + std::to_string(n) + " --mode " + mode;
    Timer timer;
    const EnumerationMode m =
        mode == "exhaustive" ? EnumerationMode::exhaustive : EnumerationMode::classified;
    const auto list =
        enumerate_idempotents(Modulus(n), m, jobs, effective_exhaustive_cap(max_exhaustive));
    if (json_out) {
        json matrices = json::array();
        for (const auto& mat : list) matrices.push_back(matrix_to_json(mat));
        std::cout << json{{"command", command},
                          {"n", n},
                          {"mode", mode},
                          {"count", list.size()},
                          {"matrices", matrices},
                          {"wall_ms", timer.ms()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "count: " << list.size() << "\n";
        for (const auto& mat : list) std::cout << "\n" << mat.to_text();
    }
    return 0;
}

int run_fourier_verify(bool json_out, std::optional<std::int64_t> n,
                       std::optional<std::int64_t> d, std::optional<std::int64_t> t,
                       const std::string& in_file) {
    std::string command = "fourier verify";
    BinaryMatrix m{Modulus(1)};
    bool built = false;
    if (!in_file.empty()) {
        m = matrix_from_file(in_file);
        command += " --in " + in_file;
    } else if (n && d && t) {
        m = build_eps(EpsParams(Modulus(*n), *d, *t));
        built = true;
        command += " --n " + std::to_string(*n) + " --d " + std::to_string(*d) + " --t " +
                   std::to_string(*t);
    } else {
        throw InvalidInput("fourier verify: give --n/--d/--t or --in FILE");
    }

    const bool idem = is_idempotent(m);
    bool trivial = false;
    std::optional<EpsParams> params;
    if (idem) {
        const Classification cls = classify(m);
        trivial = cls.trivial;
        params = cls.params;
    }

    if (json_out) {
        json j{{"command", command},
               {"n", m.n.value},
               {"rows", m.rows()},
               {"idempotent", idem},
               {"trivial", trivial}};
        if (params) {
            j["d"] = params->d;
            j["t"] = params->t;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << m.to_text();
        std::cout << "idempotent: " << (idem ? "true" : "false") << "\n";
        if (trivial) std::cout << "classified: trivial (zero matrix)\n";
        else if (params)
            std::cout << "classified: d=" << params->d << " t=" << params->t << "\n";
        else if (idem) std::cout << "classified: NO (falsifies the classification)\n";
    }

    // A family matrix failing idempotency or classification, or any idempotent
    // escaping the classification, would falsify the classification: exit 1.
    // A loaded matrix that fails idempotency is a failed verification: exit 1.
    if (built) return (idem && params && params->d == *d && params->t == *t) ? 0 : 1;
    if (!idem) return 1;
    if (!trivial && !params) return 1;
    return 0;
}

int run_fourier_partner(bool json_out, std::optional<std::int64_t> n,
                        std::optional<std::int64_t> d, std::optional<std::int64_t> t,
                        const std::string& in_file) {
    std::string command = "fourier partner";
    BinaryMatrix m{Modulus(1)};
    if (!in_file.empty()) {
        m = matrix_from_file(in_file);
        command += " --in " + in_file;
    } else if (n && d && t) {
        m = build_eps(EpsParams(Modulus(*n), *d, *t));
        command += " --n " + std::to_string(*n) + " --d " + std::to_string(*d) + " --t " +
                   std::to_string(*t);
    } else {
        throw InvalidInput("fourier partner: give --n/--d/--t or --in FILE");
    }
    if (!is_idempotent(m))
        throw InvalidInput("fourier partner: input matrix is not idempotent");

    try {
        const BinaryMatrix p = fourier_partner(m);
        if (json_out)
            std::cout << json{{"command", command}, {"partner", matrix_to_json(p)}}.dump(2)
                      << "\n";
        else std::cout << p.to_text();
        return 0;
    } catch (const NotBinaryPartner& e) {
        // Idempotent with a non-binary partner would falsify the theorem.
        std::cerr << "counterexample: " << e.what() << "\n";
        return 1;
    }
}

int run_fourier_brute(bool json_out, int jobs, std::int64_t n, std::int64_t max_exhaustive) {
    const std::string command = "fourier brute --n " + std::to_string(n);
    Timer timer;
    const auto cap = effective_exhaustive_cap(max_exhaustive);
    const auto ex = enumerate_idempotents(Modulus(n), EnumerationMode::exhaustive, jobs, cap);
    const auto cl = enumerate_idempotents(Modulus(n), EnumerationMode::classified, jobs);
    const bool match = ex == cl;
    if (json_out) {
        std::cout << json{{"command", command},
                          {"n", n},
                          {"exhaustive", ex.size()},
                          {"classified", cl.size()},
                          {"match", match},
                          {"wall_ms", timer.ms()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "exhaustive = classified: " << ex.size() << " = " << cl.size()
                  << (match ? "" : "  MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

// ---------------------------------------------------------------------- grpeq

/// Serialization modulus: exponents are powers of xi_L with this L.
std::int64_t solution_json_modulus(const GroupSolution& g) {
    return lcm(g.group.exponent(), g.denominator);
}

json solution_to_json(const GroupSolution& g) {
    const std::int64_t big = solution_json_modulus(g);
    if (big % g.l.value != 0)
        throw InvalidInput("solution serialization: incompatible modulus");
    const std::int64_t ratio = big / g.l.value;
    const std::int64_t order = g.group.order();
    json entries = json::array();
    for (std::int64_t x = 0; x < order; ++x) {
        json row = json::array();
        for (std::int64_t y = 0; y < order; ++y) {
            const CyclotomicElement& e = g.num(x, y);
            // Fast path: the carrier is literally a single monomial xi^k.
            std::int64_t k = -1;
            bool monomial = true;
            for (std::int64_t i = 0; i < g.l.value && monomial; ++i) {
                const std::int64_t c = e.coeffs()[static_cast<std::size_t>(i)];
                if (c == 0) continue;
                if (c != 1 || k != -1) monomial = false;
                else k = i;
            }
            if (monomial && k == -1) {
                row.push_back(nullptr);
                continue;
            }
            if (!monomial || k == -1) {
                // Slow path: reduced carriers; decide mathematically.
                if (e.is_zero()) {
                    row.push_back(nullptr);
                    continue;
                }
                k = -1;
                for (std::int64_t cand = 0; cand < g.l.value; ++cand)
                    if (e.equals(CyclotomicElement::root_power(g.l, cand))) { k = cand; break; }
                if (k == -1)
                    throw InvalidInput(
                        "solution serialization: entry is not a root of unity over the "
                        "denominator");
            }
            row.push_back(k * ratio);
        }
        entries.push_back(row);
    }
    return json{{"group", g.group.factors}, {"denominator", g.denominator}, {"entries", entries}};
}

GroupSolution solution_from_json(const json& j) {
    AbelianGroup group(j.at("group").get<std::vector<std::int64_t>>());
    const auto den = j.at("denominator").get<std::int64_t>();
    if (den < 1) throw InvalidInput("solution file: denominator must be positive");
    const Modulus big(lcm(group.exponent(), den));
    const auto& entries = j.at("entries");
    const std::int64_t order = group.order();
    if (static_cast<std::int64_t>(entries.size()) != order)
        throw InvalidInput("solution file: entries must be a |G| x |G| table");
    std::vector<CyclotomicElement> table;
    table.reserve(static_cast<std::size_t>(order * order));
    for (const auto& row : entries) {
        if (static_cast<std::int64_t>(row.size()) != order)
            throw InvalidInput("solution file: entries must be a |G| x |G| table");
        for (const auto& cell : row) {
            if (cell.is_null()) table.emplace_back(big);
            else table.push_back(CyclotomicElement::root_power(big, cell.get<std::int64_t>()));
        }
    }
    return GroupSolution(std::move(group), big, den, std::move(table));
}

GroupSolution solution_from_file(const std::string& path,
                                 const std::vector<std::int64_t>& group_flag) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open solution file: " + path);
    json j;
    in >> j;

    if (j.contains("entries")) {
        if (!group_flag.empty() && j.at("group").get<std::vector<std::int64_t>>() != group_flag)
            throw InvalidInput("--group does not match the solution file");
        return solution_from_json(j);
    }
    if (!j.contains("omega"))
        throw InvalidInput("solution file: expected 'entries' (solution) or 'omega' (pairing)");

    std::vector<std::int64_t> factors = group_flag;
    if (factors.empty() && j.contains("group"))
        factors = j.at("group").get<std::vector<std::int64_t>>();
    if (factors.empty())
        throw InvalidInput("pairing file needs --group or a 'group' field");
    AbelianGroup group(factors);
    auto tuples_to_indices = [&](const json& arr) {
        std::vector<std::int64_t> out;
        for (const auto& item : arr) {
            if (item.is_array()) out.push_back(group.index_of(item.get<std::vector<std::int64_t>>()));
            else out.push_back(item.get<std::int64_t>());
        }
        return out;
    };
    const SubgroupPairing pairing(group, tuples_to_indices(j.at("h1")),
                                  tuples_to_indices(j.at("h2")),
                                  j.at("omega").get<std::vector<std::vector<std::int64_t>>>());
    return build_pairing_solution(group, pairing);
}

int run_grpeq_enumerate(bool json_out, std::int64_t n) {
    const std::string command = "grpeq enumerate --n " + std::to_string(n);
    Timer timer;
    const auto sols = enumerate_cyclic_solutions(Modulus(n));
    if (json_out) {
        json arr = json::array();
        for (const auto& g : sols) arr.push_back(solution_to_json(g));
        std::cout << json{{"command", command},
                          {"n", n},
                          {"count", sols.size()},
                          {"solutions", arr},
                          {"wall_ms", timer.ms()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "count: " << sols.size() << "\n";
        std::size_t i = 0;
        for (std::int64_t d : divisors(n))
            for (std::int64_t t = 0; t < d; ++t, ++i)
                std::cout << "solution " << i << ": d=" << d << " t=" << t
                          << " denominator=" << sols[i].denominator << "\n";
    }
    return 0;
}

int run_grpeq_verify(bool json_out, int jobs, std::optional<std::int64_t> n,
                     std::optional<std::int64_t> d, std::optional<std::int64_t> t,
                     const std::vector<std::int64_t>& group_flag, const std::string& in_file) {
    std::string command = "grpeq verify";
    std::optional<GroupSolution> g;
    if (n && d && t) {
        g = build_cyclic_solution(Modulus(*n), *d, *t);
        command += " --n " + std::to_string(*n) + " --d " + std::to_string(*d) + " --t " +
                   std::to_string(*t);
    } else if (!in_file.empty()) {
        g = solution_from_file(in_file, group_flag);
        if (!group_flag.empty()) command += " --group " + join64(group_flag);
        command += " --in " + in_file;
    } else {
        throw InvalidInput("grpeq verify: give --n/--d/--t or --in FILE [--group n1,n2,...]");
    }
    Timer timer;
    const CheckReport report = verify_equations(*g, jobs);
    return emit_report(json_out, command, report, timer.ms());
}

int run_grpeq_bridge(bool json_out, int jobs, std::int64_t n) {
    const std::string command = "grpeq bridge --n " + std::to_string(n);
    Timer timer;
    const CheckReport report = check_cyclic_bridge(Modulus(n), jobs);
    if (!json_out && report.passed())
        std::cout << "bijection confirmed, " << report.filters << " = " << report.filters
                  << " solutions\n";
    return emit_report(json_out, command, report, timer.ms());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unityf: exact set-system filters, root-of-unity power sums, "
                 "discrete Fourier pairs, and the group-equation system"};
    app.require_subcommand(1);

    bool json_out = false;
    int jobs = 1;
    std::uint64_t seed = 0;
    app.add_flag("--json", json_out, "emit machine-readable JSON");
    app.add_option("--jobs", jobs, "worker threads for enumeration ranges")
        ->check(CLI::Range(1, 256));
    app.add_option("--seed", seed, "seed for sampled modes and random weights");

    int exit_code = 0;

    // power-sums
    auto* ps = app.add_subcommand("power-sums", "a_c tables for root-of-unity sets");
    ps->fallthrough();
    std::int64_t ps_n = 0;
    std::vector<std::int64_t> ps_divs, ps_exps;
    bool ps_all_c = false;
    std::int64_t ps_c = 0;
    bool ps_c_given = false;
    ps->add_option("--n", ps_n, "modulus N")->required();
    ps->add_option("--divisors", ps_divs, "divisor system E (comma separated)")->delimiter(',');
    ps->add_option("--exponents", ps_exps, "explicit exponent set (comma separated)")
        ->delimiter(',');
    ps->add_flag("--all-c", ps_all_c, "tabulate every c (divisors of N, or 0..N-1)");
    ps->add_option("--c", ps_c, "a single power index c")
        ->each([&](const std::string&) { ps_c_given = true; });
    ps->callback([&] {
        exit_code = run_power_sums(json_out, ps_n, ps_divs, ps_exps, ps_all_c,
                                   ps_c_given ? std::optional<std::int64_t>(ps_c) : std::nullopt);
    });

    // check-theorem
    auto* ct = app.add_subcommand("check-theorem", "exhaustive/sampled theorem verification");
    ct->fallthrough();
    std::string ct_which;
    int ct_size = 0;
    std::int64_t ct_n = 0;
    std::uint64_t ct_samples = 1000;
    std::vector<double> ct_weights;
    std::vector<std::uint64_t> ct_system;
    ct->add_option("--which", ct_which, "filter | roots")
        ->required()
        ->check(CLI::IsMember({"filter", "roots"}));
    ct->add_option("--size", ct_size, "ground-set size (filter mode)");
    ct->add_option("--n", ct_n, "modulus (roots mode)");
    ct->add_option("--samples", ct_samples, "sample count for sampled filter sizes");
    ct->add_option("--weights", ct_weights, "atom weights (default: random positive)")
        ->delimiter(',');
    ct->add_option("--system", ct_system, "check one explicit system of subset masks")
        ->delimiter(',');
    ct->callback([&] {
        if (ct_which == "filter") {
            if (ct_size <= 0) throw InvalidInput("check-theorem --which filter needs --size");
            exit_code =
                run_check_filter(json_out, jobs, seed, ct_size, ct_weights, ct_system, ct_samples);
        } else {
            if (ct_n <= 0) throw InvalidInput("check-theorem --which roots needs --n");
            exit_code = run_check_roots(json_out, jobs, ct_n);
        }
    });

    // fourier
    auto* fr = app.add_subcommand("fourier", "{0,1}-idempotents and Fourier partners");
    fr->require_subcommand(1);
    fr->fallthrough();
    std::int64_t fr_n = 0, fr_d = 0, fr_t = -1, fr_cap = 0;
    bool fr_d_given = false, fr_t_given = false, fr_n_given = false;
    std::string fr_mode = "classified", fr_in;

    auto add_fourier_common = [&](CLI::App* sub, bool needs_n) {
        sub->fallthrough();
        auto* n_opt = sub->add_option("--n", fr_n, "matrix order N")
                          ->each([&](const std::string&) { fr_n_given = true; });
        if (needs_n) n_opt->required();
        sub->add_option("--d", fr_d, "divisor d of N")
            ->each([&](const std::string&) { fr_d_given = true; });
        sub->add_option("--t", fr_t, "shift parameter 0 <= t < d")
            ->each([&](const std::string&) { fr_t_given = true; });
    };

    auto* fr_enum = fr->add_subcommand("enumerate", "all idempotents of order N");
    add_fourier_common(fr_enum, true);
    fr_enum->add_option("--mode", fr_mode, "classified | exhaustive")
        ->check(CLI::IsMember({"classified", "exhaustive"}));
    fr_enum->add_option("--max-exhaustive", fr_cap, "exhaustive order cap (max 5)");
    fr_enum->callback(
        [&] { exit_code = run_fourier_enumerate(json_out, jobs, fr_n, fr_mode, fr_cap); });

    auto* fr_verify = fr->add_subcommand("verify", "build eps(d,t) or load a matrix; classify");
    add_fourier_common(fr_verify, false);
    fr_verify->add_option("--in", fr_in, "matrix file (text or JSON)");
    fr_verify->callback([&] {
        exit_code = run_fourier_verify(
            json_out, fr_n_given ? std::optional<std::int64_t>(fr_n) : std::nullopt,
            fr_d_given ? std::optional<std::int64_t>(fr_d) : std::nullopt,
            fr_t_given ? std::optional<std::int64_t>(fr_t) : std::nullopt, fr_in);
    });

    auto* fr_partner = fr->add_subcommand("partner", "exact Fourier partner of an idempotent");
    add_fourier_common(fr_partner, false);
    fr_partner->add_option("--in", fr_in, "matrix file (text or JSON)");
    fr_partner->callback([&] {
        exit_code = run_fourier_partner(
            json_out, fr_n_given ? std::optional<std::int64_t>(fr_n) : std::nullopt,
            fr_d_given ? std::optional<std::int64_t>(fr_d) : std::nullopt,
            fr_t_given ? std::optional<std::int64_t>(fr_t) : std::nullopt, fr_in);
    });

    auto* fr_brute = fr->add_subcommand("brute", "exhaustive vs classified enumeration");
    add_fourier_common(fr_brute, true);
    fr_brute->add_option("--max-exhaustive", fr_cap, "exhaustive order cap (max 5)");
    fr_brute->callback([&] { exit_code = run_fourier_brute(json_out, jobs, fr_n, fr_cap); });

    // grpeq
    auto* gq = app.add_subcommand("grpeq", "group-equation solutions");
    gq->require_subcommand(1);
    gq->fallthrough();
    std::int64_t gq_n = 0, gq_d = 0, gq_t = -1;
    bool gq_n_given = false, gq_d_given = false, gq_t_given = false;
    std::vector<std::int64_t> gq_group;
    std::string gq_in;

    auto* gq_enum = gq->add_subcommand("enumerate", "the sigma(n) cyclic solutions");
    gq_enum->fallthrough();
    gq_enum->add_option("--n", gq_n, "cyclic group order")->required();
    gq_enum->callback([&] { exit_code = run_grpeq_enumerate(json_out, gq_n); });

    auto* gq_verify = gq->add_subcommand("verify", "verify a solution against grpeq01-04");
    gq_verify->fallthrough();
    gq_verify->add_option("--n", gq_n, "cyclic group order")
        ->each([&](const std::string&) { gq_n_given = true; });
    gq_verify->add_option("--d", gq_d, "divisor d of n")
        ->each([&](const std::string&) { gq_d_given = true; });
    gq_verify->add_option("--t", gq_t, "parameter 0 <= t < d")
        ->each([&](const std::string&) { gq_t_given = true; });
    gq_verify->add_option("--group", gq_group, "abelian group factors n1,n2,...")->delimiter(',');
    gq_verify->add_option("--in", gq_in, "solution or pairing JSON file");
    gq_verify->callback([&] {
        exit_code = run_grpeq_verify(
            json_out, jobs, gq_n_given ? std::optional<std::int64_t>(gq_n) : std::nullopt,
            gq_d_given ? std::optional<std::int64_t>(gq_d) : std::nullopt,
            gq_t_given ? std::optional<std::int64_t>(gq_t) : std::nullopt, gq_group, gq_in);
    });

    auto* gq_bridge = gq->add_subcommand("bridge", "g <-> eps completeness bijection");
    gq_bridge->fallthrough();
    gq_bridge->add_option("--n", gq_n, "cyclic group order")->required();
    gq_bridge->callback([&] { exit_code = run_grpeq_bridge(json_out, jobs, gq_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const unityf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
