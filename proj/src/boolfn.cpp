#include "qspectra/boolfn.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <utility>

#include "qspectra/bits.hpp"
#include "qspectra/fwht.hpp"

namespace qspectra {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::bad_character: return "BadCharacter";
        case Errc::missing_header: return "MissingHeader";
        case Errc::unsupported_n: return "UnsupportedN";
        case Errc::size_mismatch: return "SizeMismatch";
        case Errc::not_bent: return "NotBent";
        case Errc::too_large: return "TooLarge";
        case Errc::too_many_qubits: return "TooManyQubits";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::bad_weight: return "BadWeight";
        case Errc::no_good_support: return "NoGoodSupport";
        case Errc::simulation_inconsistency: return "SimulationInconsistency";
    }
    return "UnknownError";
}

namespace {

void check_var_count(int n) {
    if (n < 1 || n > kMaxVars)
        fail(Errc::unsupported_n, "variable count must be in [1, " + std::to_string(kMaxVars) +
                                      "], got " + std::to_string(n));
}

std::string strip(const std::string& line) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    size_t b = line.find_last_not_of(" \t\r");
    return line.substr(a, b - a + 1);
}

std::vector<int64_t> walsh_values(const TruthTable& f) {
    std::vector<int64_t> w(f.values.begin(), f.values.end());
    fwht_inplace(w);
    return w;
}

}  // namespace

TruthTable::TruthTable(int n_vars, std::vector<int8_t> vals) : n(n_vars), values(std::move(vals)) {
    check_var_count(n);
    if (values.size() != (1u << n))
        fail(Errc::length_mismatch, "expected " + std::to_string(1u << n) + " entries, got " +
                                        std::to_string(values.size()));
    for (int8_t v : values)
        if (v != 1 && v != -1) fail(Errc::bad_character, "table entries must be +1 or -1");
}

TruthTable parse_truth_table(std::istream& in) {
    std::string line;
    bool header_seen = false;
    int n = 0;
    std::string bits;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (!header_seen) {
            if (s.rfind("n=", 0) != 0) fail(Errc::missing_header, "first line must be n=<count>");
            const std::string digits = s.substr(2);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                fail(Errc::missing_header, "malformed variable count '" + digits + "'");
            n = std::stoi(digits);
            check_var_count(n);
            header_seen = true;
        } else {
            bits += s;
        }
    }
    if (!header_seen) fail(Errc::missing_header, "empty input");
    for (char c : bits)
        if (c != '0' && c != '1') fail(Errc::bad_character, std::string("unexpected character '") + c + "'");
    if (bits.size() != (1u << n))
        fail(Errc::length_mismatch, "expected " + std::to_string(1u << n) + " bits, got " +
                                        std::to_string(bits.size()));
    std::vector<int8_t> values(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) values[i] = bits[i] == '0' ? 1 : -1;
    return TruthTable(n, std::move(values));
}

TruthTable parse_truth_table(const std::string& text) {
    std::istringstream in(text);
    return parse_truth_table(in);
}

TruthTable load_truth_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::missing_header, "cannot open '" + path + "'");
    return parse_truth_table(in);
}

std::string serialize(const TruthTable& f) {
    std::string out = "n=" + std::to_string(f.n) + "\n";
    for (int8_t v : f.values) out += v > 0 ? '0' : '1';
    out += '\n';
    return out;
}

TruthTable constant(int n, int sign) {
    check_var_count(n);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    return TruthTable(n, std::vector<int8_t>(1u << n, static_cast<int8_t>(sign)));
}

TruthTable linear(int n, uint32_t y) {
    check_var_count(n);
    if (y >= (1u << n)) fail(Errc::index_out_of_range, "point outside {0,1}^n");
    std::vector<int8_t> values(1u << n);
    for (uint32_t x = 0; x < (1u << n); ++x) values[x] = parity(x & y) ? -1 : 1;
    return TruthTable(n, std::move(values));
}

TruthTable linear(int n, const std::string& y) {
    if (static_cast<int>(y.size()) != n)
        fail(Errc::length_mismatch, "point '" + y + "' is not " + std::to_string(n) + " bits");
    return linear(n, static_cast<uint32_t>(bits_from_string(y)));
}

TruthTable indicator_negated(int n, const std::vector<uint32_t>& points) {
    check_var_count(n);
    std::vector<int8_t> values(1u << n, 1);
    for (uint32_t p : points) {
        if (p >= (1u << n)) fail(Errc::index_out_of_range, "point outside {0,1}^n");
        values[p] = -1;
    }
    return TruthTable(n, std::move(values));
}

TruthTable weight_threshold(int n, int m) {
    check_var_count(n);
    if (m < 0 || m >= n) throw std::invalid_argument("weight threshold requires 0 <= m < n");
    std::vector<int8_t> values(1u << n);
    for (uint32_t x = 0; x < (1u << n); ++x) values[x] = weight(x) <= m ? -1 : 1;
    return TruthTable(n, std::move(values));
}

TruthTable xor_tables(const TruthTable& f, const TruthTable& g) {
    if (f.n != g.n) fail(Errc::size_mismatch, "tables have different variable counts");
    std::vector<int8_t> values(f.size());
    for (uint32_t x = 0; x < f.size(); ++x) values[x] = static_cast<int8_t>(f(x) * g(x));
    return TruthTable(f.n, std::move(values));
}

TruthTable negate(const TruthTable& f) {
    std::vector<int8_t> values(f.size());
    for (uint32_t x = 0; x < f.size(); ++x) values[x] = static_cast<int8_t>(-f(x));
    return TruthTable(f.n, std::move(values));
}

bool is_balanced(const TruthTable& f) {
    int64_t sum = 0;
    for (int8_t v : f.values) sum += v;
    return sum == 0;
}

bool is_bent(const TruthTable& f) {
    if (f.n % 2 != 0) return false;
    const int64_t target = int64_t{1} << (f.n / 2);
    for (int64_t w : walsh_values(f))
        if (w != target && w != -target) return false;
    return true;
}

TruthTable dual(const TruthTable& f) {
    if (!is_bent(f)) fail(Errc::not_bent, "dual is defined for bent functions only");
    std::vector<int64_t> w = walsh_values(f);
    std::vector<int8_t> values(f.size());
    for (uint32_t x = 0; x < f.size(); ++x) values[x] = w[x] > 0 ? 1 : -1;
    return TruthTable(f.n, std::move(values));
}

namespace {

// Truth table of the quadratic form encoded by coeff_mask: bit k of the mask
// toggles the monomial x_i x_j where (i, j) is the k-th pair in lexicographic
// order, i < j.
TruthTable quadratic_form_table(int n, uint64_t coeff_mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<int8_t> values(1u << n);
    for (uint32_t x = 0; x < (1u << n); ++x) {
        int acc = 0;
        for (size_t k = 0; k < pairs.size(); ++k) {
            if (!((coeff_mask >> k) & 1ull)) continue;
            int xi = (x >> (n - 1 - pairs[k].first)) & 1;
            int xj = (x >> (n - 1 - pairs[k].second)) & 1;
            acc ^= xi & xj;
        }
        values[x] = acc ? -1 : 1;
    }
    return TruthTable(n, std::move(values));
}

struct FamilyCandidate {
    TruthTable fn;
    TruthTable dual_fn;
};

int64_t sign_sum(const TruthTable& a, const TruthTable& b) {
    int64_t sum = 0;
    for (uint32_t x = 0; x < a.size(); ++x) sum += a(x) * b(x);
    return sum;
}

bool family_compatible(const FamilyCandidate& a, const FamilyCandidate& b, int64_t imbalance) {
    if (!is_bent(xor_tables(a.fn, b.fn))) return false;
    if (std::abs(sign_sum(b.fn, a.dual_fn)) != imbalance) return false;
    if (std::abs(sign_sum(a.fn, b.dual_fn)) != imbalance) return false;
    return true;
}

}  // namespace

std::vector<TruthTable> bent_family(int n) {
    if (n < 4 || n % 2 != 0 || n > kMaxVars)
        fail(Errc::unsupported_n, "bent family needs even n in [4, " + std::to_string(kMaxVars) + "]");

    const int pair_count = n * (n - 1) / 2;
    const int64_t imbalance = int64_t{1} << (n / 2);
    constexpr size_t kPoolSize = 512;
    constexpr size_t kFamilySize = 4;

    std::vector<FamilyCandidate> pool;
    std::mt19937_64 rng(0x51f7c0deull);
    if (pair_count <= 20) {
        for (uint64_t mask = 0; mask < (1ull << pair_count); ++mask) {
            TruthTable f = quadratic_form_table(n, mask);
            if (is_bent(f)) pool.push_back({f, dual(f)});
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        if (pool.size() > kPoolSize) pool.resize(kPoolSize);
    } else {
        size_t attempts = 0;
        while (pool.size() < kPoolSize && attempts < 200000) {
            ++attempts;
            uint64_t mask = rng() & ((pair_count == 64) ? ~0ull : ((1ull << pair_count) - 1));
            TruthTable f = quadratic_form_table(n, mask);
            if (is_bent(f)) pool.push_back({f, dual(f)});
        }
    }

    std::vector<size_t> picked;
    auto backtrack = [&](auto&& self, size_t start) -> bool {
        if (picked.size() == kFamilySize) return true;
        for (size_t i = start; i < pool.size(); ++i) {
            bool ok = true;
            for (size_t j : picked)
                if (!family_compatible(pool[i], pool[j], imbalance)) { ok = false; break; }
            if (!ok) continue;
            picked.push_back(i);
            if (self(self, i + 1)) return true;
            picked.pop_back();
        }
        return false;
    };
    if (!backtrack(backtrack, 0))
        fail(Errc::unsupported_n, "no compatible bent family found at n=" + std::to_string(n));

    std::vector<TruthTable> family;
    for (size_t i : picked) family.push_back(pool[i].fn);

    // Re-verify the promised properties on the final list.
    for (size_t i = 0; i < family.size(); ++i) {
        if (!is_bent(family[i])) fail(Errc::not_bent, "family member is not bent");
        for (size_t j = 0; j < family.size(); ++j) {
            if (i == j) continue;
            if (!is_bent(xor_tables(family[i], family[j])))
                fail(Errc::not_bent, "family pair xor is not bent");
            if (std::abs(sign_sum(family[j], dual(family[i]))) != imbalance)
                fail(Errc::not_bent, "family pair fails the dual separation property");
        }
    }
    return family;
}

}  // namespace qspectra
