#include "hsplab/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hsplab/numtheory.hpp"

namespace hsplab::ffield {

namespace {

using Poly = std::vector<std::uint64_t>;  // little-endian coefficients, entries in [0, p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return int(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (unsigned __int128)(a[i]) * b[j]) % p;
    }
    return r;
}

std::uint64_t mod_inv_scalar(std::uint64_t a, std::uint64_t p) {
    return numtheory::mod_inverse(numtheory::BigInt(a), numtheory::BigInt(p)).get_ui();
}

// a mod b, b nonzero (not necessarily monic).
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const std::uint64_t lead_inv = mod_inv_scalar(b.back(), p);
    while (deg(a) >= deg(b)) {
        const std::uint64_t c = (unsigned __int128)(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = (unsigned __int128)(c)*b[i] % p;
            std::uint64_t& slot = a[i + shift];
            slot = (slot + p - t) % p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly full_modulus(const FieldSpec& f) {
    Poly m = f.modulus_low;
    m.resize(f.degree + 1, 0);
    m[f.degree] = 1;
    return m;
}

bool is_irreducible(const Poly& candidate, std::uint64_t p) {
    const int d = deg(candidate);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int k = 1; 2 * k <= d; ++k) {
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly div(k + 1, 0);
            std::uint64_t t = idx;
            for (int i = 0; i < k; ++i) { div[i] = t % p; t /= p; }
            div[k] = 1;
            if (poly_mod(candidate, div, p).empty()) return false;
        }
    }
    return true;
}

void check_same_field(const FieldSpec& f, const FieldElement& a, const char* who) {
    if (a.coeffs.size() != f.degree) throw std::invalid_argument(std::string(who) + ": wrong coefficient count");
}

}  // namespace

std::uint64_t FieldSpec::size() const {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < degree; ++i) q *= p;
    return q;
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, std::uint32_t n) {
    if (!numtheory::is_prime(numtheory::BigInt(p))) throw std::invalid_argument("find_irreducible: p must be prime");
    if (n < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        count *= p;
        if (count > 1000000) throw std::invalid_argument("find_irreducible: p^n exceeds the desk-scale bound 10^6");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly cand(n + 1, 0);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < n; ++i) { cand[i] = t % p; t /= p; }
        cand[n] = 1;
        if (is_irreducible(cand, p)) {
            cand.pop_back();
            return cand;
        }
    }
    throw std::runtime_error("find_irreducible: no candidate found (bound exceeded?)");
}

FieldSpec make_field(std::uint64_t p, std::uint32_t n) {
    FieldSpec f;
    f.p = p;
    f.degree = n;
    f.modulus_low = find_irreducible(p, n);
    return f;
}

FieldElement zero(const FieldSpec& f) { return FieldElement{Poly(f.degree, 0)}; }

FieldElement one(const FieldSpec& f) {
    FieldElement a = zero(f);
    a.coeffs[0] = 1 % f.p;
    return a;
}

FieldElement element_of_index(const FieldSpec& f, std::uint64_t index) {
    FieldElement a = zero(f);
    for (std::uint32_t i = 0; i < f.degree; ++i) { a.coeffs[i] = index % f.p; index /= f.p; }
    return a;
}

std::uint64_t index_of(const FieldSpec& f, const FieldElement& a) {
    check_same_field(f, a, "index_of");
    std::uint64_t idx = 0;
    for (std::uint32_t i = f.degree; i-- > 0;) idx = idx * f.p + a.coeffs[i] % f.p;
    return idx;
}

FieldElement add(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
    check_same_field(f, a, "add");
    check_same_field(f, b, "add");
    FieldElement r = a;
    for (std::uint32_t i = 0; i < f.degree; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % f.p;
    return r;
}

FieldElement neg(const FieldSpec& f, const FieldElement& a) {
    check_same_field(f, a, "neg");
    FieldElement r = a;
    for (auto& c : r.coeffs) c = c == 0 ? 0 : f.p - c;
    return r;
}

FieldElement sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
    return add(f, a, neg(f, b));
}

FieldElement mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
    check_same_field(f, a, "mul");
    check_same_field(f, b, "mul");
    Poly prod = poly_mul(a.coeffs, b.coeffs, f.p);
    trim(prod);
    if (!prod.empty()) prod = poly_mod(std::move(prod), full_modulus(f), f.p);
    prod.resize(f.degree, 0);
    return FieldElement{std::move(prod)};
}

bool is_zero(const FieldElement& a) {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

FieldElement inv(const FieldSpec& f, const FieldElement& a) {
    check_same_field(f, a, "inv");
    if (is_zero(a)) throw std::invalid_argument("inv: zero has no multiplicative inverse");
    // Extended Euclid on (a, modulus) over F_p[X].
    Poly r0 = a.coeffs, r1 = full_modulus(f);
    trim(r0);
    Poly s0 = {1}, s1 = {};
    while (!r1.empty()) {
        // Compute quotient digit-by-digit: r0 = q*r1 + rem.
        Poly q;
        Poly rem = r0;
        trim(rem);
        const std::uint64_t lead_inv = mod_inv_scalar(r1.back(), f.p);
        while (deg(rem) >= deg(r1)) {
            const std::size_t shift = rem.size() - r1.size();
            const std::uint64_t c = (unsigned __int128)(rem.back()) * lead_inv % f.p;
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = (q[shift] + c) % f.p;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                std::uint64_t t = (unsigned __int128)(c)*r1[i] % f.p;
                rem[i + shift] = (rem[i + shift] + f.p - t) % f.p;
            }
            trim(rem);
            if (rem.empty()) break;
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Poly qs = poly_mul(q, s1, f.p);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = (s2[i] + f.p - qs[i]) % f.p;
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd, a unit scalar since the modulus is irreducible.
    if (deg(r0) != 0) throw std::logic_error("inv: modulus is not irreducible");
    const std::uint64_t scale = mod_inv_scalar(r0[0], f.p);
    Poly out = s0;
    for (auto& c : out) c = (unsigned __int128)(c)*scale % f.p;
    out = poly_mod(std::move(out), full_modulus(f), f.p);
    out.resize(f.degree, 0);
    return FieldElement{std::move(out)};
}

FieldElement pow(const FieldSpec& f, const FieldElement& a, std::uint64_t e) {
    FieldElement acc = one(f), b = a;
    while (e > 0) {
        if (e & 1) acc = mul(f, acc, b);
        b = mul(f, b, b);
        e >>= 1;
    }
    return acc;
}

std::vector<FieldElement> enumerate(const FieldSpec& f) {
    const std::uint64_t q = f.size();
    if (q > 1000000) throw std::invalid_argument("enumerate: field size exceeds 10^6");
    std::vector<FieldElement> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(element_of_index(f, i));
    return out;
}

FieldElement embed(const FieldSpec& sub, const FieldSpec& big, const FieldElement& a) {
    check_same_field(sub, a, "embed");
    if (sub.p != big.p || big.degree % sub.degree != 0)
        throw std::invalid_argument("embed: target is not an extension of the subfield");
    if (sub == big) return a;

    // Image of the subfield generator: the smallest root of the subfield
    // modulus in the big field. Cached per spec pair.
    static std::map<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>, FieldElement> cache;
    static std::mutex cache_mutex;
    auto key = std::make_pair(sub.modulus_low, big.modulus_low);
    FieldElement root = zero(big);
    bool found = false;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) { root = it->second; found = true; }
    }
    if (!found) {
        Poly mod_full = full_modulus(sub);
        for (std::uint64_t i = 0; i < big.size(); ++i) {
            FieldElement cand = element_of_index(big, i);
            // Evaluate the subfield modulus at cand by Horner.
            FieldElement acc = zero(big);
            for (std::size_t d = mod_full.size(); d-- > 0;) {
                acc = mul(big, acc, cand);
                FieldElement c = zero(big);
                c.coeffs[0] = mod_full[d] % big.p;
                acc = add(big, acc, c);
            }
            if (is_zero(acc)) { root = cand; found = true; break; }
        }
        if (!found) throw std::logic_error("embed: no root of the subfield modulus (not a field extension?)");
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, root);
    }

    FieldElement acc = zero(big);
    for (std::size_t d = sub.degree; d-- > 0;) {
        acc = mul(big, acc, root);
        FieldElement c = zero(big);
        c.coeffs[0] = a.coeffs[d] % big.p;
        acc = add(big, acc, c);
    }
    return acc;
}

std::string render(const FieldSpec& f, const FieldElement& a) {
    check_same_field(f, a, "render");
    std::string out;
    for (std::size_t i = f.degree; i-- > 0;) {
        const std::uint64_t c = a.coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace hsplab::ffield
