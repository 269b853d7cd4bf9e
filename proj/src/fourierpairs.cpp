#include "unityf/fourierpairs.hpp"

#include <algorithm>
#include <string>

#include "unityf/checked.hpp"
#include "unityf/parallel.hpp"

namespace unityf {

BinaryMatrix::BinaryMatrix(Modulus n_)
    : n(n_), a(static_cast<std::size_t>(n_.value * n_.value), 0) {
    if (n.value > kMaxMatrixOrder)
        throw CapExceeded("BinaryMatrix: order " + std::to_string(n.value) + " exceeds cap " +
                          std::to_string(kMaxMatrixOrder));
}

BinaryMatrix::BinaryMatrix(Modulus n_, std::vector<std::uint8_t> entries) : BinaryMatrix(n_) {
    if (entries.size() != a.size())
        throw InvalidInput("BinaryMatrix: expected " + std::to_string(a.size()) +
                           " entries, got " + std::to_string(entries.size()));
    for (std::uint8_t v : entries)
        if (v > 1) throw InvalidInput("BinaryMatrix: entries must be 0 or 1");
    a = std::move(entries);
}

std::int64_t BinaryMatrix::total() const {
    std::int64_t s = 0;
    for (std::uint8_t v : a) s += v;
    return s;
}

std::vector<std::string> BinaryMatrix::rows() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n.value));
    for (std::int64_t i = 0; i < n.value; ++i) {
        std::string row(static_cast<std::size_t>(n.value), '0');
        for (std::int64_t j = 0; j < n.value; ++j)
            if (at(i, j)) row[static_cast<std::size_t>(j)] = '1';
        out.push_back(std::move(row));
    }
    return out;
}

std::string BinaryMatrix::to_text() const {
    std::string out;
    for (const auto& row : rows()) {
        out += row;
        out += '\n';
    }
    return out;
}

BinaryMatrix BinaryMatrix::from_rows(std::int64_t n, const std::vector<std::string>& rows) {
    BinaryMatrix m{Modulus(n)};
    if (rows.size() != static_cast<std::size_t>(n))
        throw InvalidInput("matrix: expected " + std::to_string(n) + " rows");
    for (std::int64_t i = 0; i < n; ++i) {
        const std::string& row = rows[static_cast<std::size_t>(i)];
        if (row.size() != static_cast<std::size_t>(n))
            throw InvalidInput("matrix: row " + std::to_string(i) + " has wrong length");
        for (std::int64_t j = 0; j < n; ++j) {
            const char c = row[static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') throw InvalidInput("matrix: entries must be '0' or '1'");
            m.set(i, j, c == '1' ? 1 : 0);
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::parse_text(const std::string& text) {
    std::vector<std::string> rows;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty()) rows.push_back(current);
            current.clear();
        } else if (c != '\r' && c != ' ') {
            current += c;
        }
    }
    if (!current.empty()) rows.push_back(current);
    if (rows.empty()) throw InvalidInput("matrix: empty text");
    return from_rows(static_cast<std::int64_t>(rows.size()), rows);
}

EpsParams::EpsParams(Modulus n_, std::int64_t d_, std::int64_t t_) : n(n_), d(d_), t(t_) {
    if (d < 1 || n.value % d != 0)
        throw InvalidInput("EpsParams: d = " + std::to_string(d) + " does not divide " +
                           std::to_string(n.value));
    if (t < 0 || t >= d)
        throw InvalidInput("EpsParams: t = " + std::to_string(t) + " outside 0.." +
                           std::to_string(d - 1));
}

BinaryMatrix build_eps(const EpsParams& p) {
    const std::int64_t n = p.n.value, d = p.d, step = n / d;
    BinaryMatrix m{p.n};
    for (std::int64_t s = 0; s < d; ++s) {
        const std::int64_t i = step * s;
        for (std::int64_t j = 0; j < n; ++j)
            if (((j - p.t * s) % d + d) % d == 0) m.set(i, j, 1);
    }
    return m;
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> ones_of(const BinaryMatrix& m) {
    std::vector<std::pair<std::int64_t, std::int64_t>> ones;
    for (std::int64_t i = 0; i < m.n.value; ++i)
        for (std::int64_t j = 0; j < m.n.value; ++j)
            if (m.at(i, j)) ones.emplace_back(i, j);
    return ones;
}

} // namespace

bool is_idempotent(const BinaryMatrix& m) {
    const std::int64_t n = m.n.value;
    const auto ones = ones_of(m);
    std::vector<std::int64_t> conv(static_cast<std::size_t>(n * n), 0);
    for (const auto& [i1, j1] : ones)
        for (const auto& [i2, j2] : ones)
            ++conv[static_cast<std::size_t>((i1 + i2) % n * n + (j1 + j2) % n)];
    for (std::int64_t idx = 0; idx < n * n; ++idx)
        if (conv[static_cast<std::size_t>(idx)] != n * m.a[static_cast<std::size_t>(idx)])
            return false;
    return true;
}

Classification classify(const BinaryMatrix& m) {
    if (!is_idempotent(m)) throw InvalidInput("classify: matrix is not an idempotent");
    const std::int64_t n = m.n.value;
    if (m.total() == 0) return Classification{true, std::nullopt};

    std::int64_t row0 = 0;
    for (std::int64_t j = 0; j < n; ++j) row0 += m.at(0, j);
    if (row0 == 0 || n % row0 != 0) return Classification{false, std::nullopt};
    const std::int64_t d = n / row0;

    // First 1 in row n/d gives t (row 0 itself when d = 1, where t = 0).
    std::int64_t t = -1;
    const std::int64_t probe_row = (n / d) % n;
    for (std::int64_t j = 0; j < n; ++j)
        if (m.at(probe_row, j)) { t = j; break; }
    if (d == 1) t = 0;
    if (t < 0 || t >= d) return Classification{false, std::nullopt};

    const EpsParams params{m.n, d, t};
    if (build_eps(params) == m) return Classification{false, params};
    return Classification{false, std::nullopt};
}

BinaryMatrix fourier_partner(const BinaryMatrix& m) {
    const std::int64_t n = m.n.value;
    const auto ones = ones_of(m);
    BinaryMatrix out{m.n};
    for (std::int64_t k = 0; k < n; ++k)
        for (std::int64_t l = 0; l < n; ++l) {
            CyclotomicElement sum(m.n);
            for (const auto& [i, j] : ones) sum.accumulate_root_power(-(i * k + j * l));
            const auto value = sum.as_integer();
            if (value == 0)
                continue;
            if (value == n)
                out.set(k, l, 1);
            else
                throw NotBinaryPartner("fourier_partner: entry (" + std::to_string(k) + "," +
                                       std::to_string(l) + ") is not 0 or n");
        }
    return out;
}

BinaryMatrix shift(const BinaryMatrix& m, std::int64_t d, std::int64_t t) {
    const std::int64_t n = m.n.value;
    if (d < 1 || n % d != 0) throw InvalidInput("shift: d does not divide n");
    const std::int64_t step = n / d;
    for (std::int64_t i = 0; i < n; ++i)
        if (i % step != 0)
            for (std::int64_t j = 0; j < n; ++j)
                if (m.at(i, j))
                    throw InvalidInput("shift: row " + std::to_string(i) +
                                       " outside the multiples of n/d has a 1");
    BinaryMatrix out{m.n};
    for (std::int64_t s = 0; s < d; ++s) {
        const std::int64_t i = step * s;
        const std::int64_t offset = ((t % n) * s % n + n) % n;
        for (std::int64_t j = 0; j < n; ++j)
            if (m.at(i, j)) out.set(i, (j + offset) % n, 1);
    }
    return out;
}

BinaryMatrix point_reflection(const BinaryMatrix& m) {
    const std::int64_t n = m.n.value;
    BinaryMatrix out{m.n};
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (m.at(i, j)) out.set((n - i) % n, (n - j) % n, 1);
    return out;
}

BinaryMatrix transpose(const BinaryMatrix& m) {
    const std::int64_t n = m.n.value;
    BinaryMatrix out{m.n};
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (m.at(i, j)) out.set(j, i, 1);
    return out;
}

namespace {

std::vector<BinaryMatrix> enumerate_classified(Modulus n) {
    if (n.value > kMaxClassifiedOrder)
        throw CapExceeded("enumerate_idempotents: order exceeds classified cap " +
                          std::to_string(kMaxClassifiedOrder));
    std::vector<BinaryMatrix> out;
    out.emplace_back(n);
    for (std::int64_t d : divisors(n.value))
        for (std::int64_t t = 0; t < d; ++t) out.push_back(build_eps(EpsParams{n, d, t}));
    std::sort(out.begin(), out.end());
    return out;
}

BinaryMatrix matrix_from_mask(Modulus n, std::uint64_t mask) {
    BinaryMatrix m{n};
    for (std::int64_t b = 0; b < n.value * n.value; ++b)
        if (mask >> b & 1u) m.a[static_cast<std::size_t>(b)] = 1;
    return m;
}

/// Fast idempotency for mask-sized matrices: convolution counts vs n * entry.
bool mask_is_idempotent(std::int64_t n, std::uint64_t mask) {
    std::vector<std::pair<std::int64_t, std::int64_t>> ones;
    for (std::int64_t b = 0; b < n * n; ++b)
        if (mask >> b & 1u) ones.emplace_back(b / n, b % n);
    std::vector<std::int64_t> conv(static_cast<std::size_t>(n * n), 0);
    for (const auto& [i1, j1] : ones)
        for (const auto& [i2, j2] : ones)
            ++conv[static_cast<std::size_t>((i1 + i2) % n * n + (j1 + j2) % n)];
    for (std::int64_t b = 0; b < n * n; ++b) {
        const std::int64_t expected = (mask >> b & 1u) ? n : 0;
        if (conv[static_cast<std::size_t>(b)] != expected) return false;
    }
    return true;
}

std::vector<BinaryMatrix> enumerate_exhaustive(Modulus n, int jobs) {
    const std::int64_t nn = n.value * n.value;

    // Subgroup indicator masks over n bits: multiples of d for each d | n.
    std::vector<std::uint64_t> subgroup_masks;
    for (std::int64_t d : divisors(n.value)) {
        std::uint64_t mask = 0;
        for (std::int64_t i = 0; i < n.value; i += d) mask |= std::uint64_t{1} << i;
        subgroup_masks.push_back(mask);
    }
    std::sort(subgroup_masks.begin(), subgroup_masks.end());

    const std::uint64_t row0_mask_bits = (n.value == 64)
                                             ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << n.value) - 1;
    const std::uint64_t total = std::uint64_t{1} << nn;
    auto parts = run_chunked<std::vector<std::uint64_t>>(
        total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
            std::vector<std::uint64_t> found;
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                const int pop = __builtin_popcountll(mask);
                if (pop == 0) {
                    found.push_back(mask);
                    continue;
                }
                if (pop != n.value) continue;
                // Proof facts for nonzero solutions: entry (0,0) is 1 and both
                // row 0 and column 0 are subgroup indicators.
                if ((mask & 1u) == 0) continue;
                const std::uint64_t row0 = mask & row0_mask_bits;
                if (!std::binary_search(subgroup_masks.begin(), subgroup_masks.end(), row0))
                    continue;
                std::uint64_t col0 = 0;
                for (std::int64_t i = 0; i < n.value; ++i)
                    if (mask >> (i * n.value) & 1u) col0 |= std::uint64_t{1} << i;
                if (!std::binary_search(subgroup_masks.begin(), subgroup_masks.end(), col0))
                    continue;
                if (mask_is_idempotent(n.value, mask)) found.push_back(mask);
            }
            return found;
        });

    std::vector<BinaryMatrix> out;
    for (const auto& part : parts)
        for (std::uint64_t mask : part) out.push_back(matrix_from_mask(n, mask));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<BinaryMatrix> enumerate_idempotents(Modulus n, EnumerationMode mode, int jobs,
                                                std::int64_t max_exhaustive_order) {
    if (mode == EnumerationMode::classified) return enumerate_classified(n);
    const std::int64_t cap = std::min(max_exhaustive_order, kMaxExhaustiveOrder);
    if (n.value > cap)
        throw CapExceeded("enumerate_idempotents: exhaustive mode capped at n = " +
                          std::to_string(cap));
    return enumerate_exhaustive(n, jobs);
}

std::vector<BinaryMatrix> enumerate_idempotents_raw(Modulus n) {
    if (n.value > 3)
        throw CapExceeded("enumerate_idempotents_raw: reference scan capped at n = 3");
    const std::int64_t nn = n.value * n.value;
    std::vector<BinaryMatrix> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nn); ++mask)
        if (mask_is_idempotent(n.value, mask)) out.push_back(matrix_from_mask(n, mask));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace unityf
