#include "radred/poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace radred {

BiCoeff BiCoeff::monomial(const Rational& c, int deg_d, int deg_D) {
    BiCoeff r;
    r.add_term(deg_d, deg_D, c);
    return r;
}

void BiCoeff::add_term(int deg_d, int deg_D, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({deg_d, deg_D}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational BiCoeff::coefficient(int deg_d, int deg_D) const {
    auto it = terms_.find({deg_d, deg_D});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BiCoeff::evaluate(const Rational& d, const Rational& D) const {
    Rational acc;
    for (const auto& [e, c] : terms_) acc += c * d.pow(e.first) * D.pow(e.second);
    return acc;
}

BiCoeff& BiCoeff::operator+=(const BiCoeff& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiCoeff& BiCoeff::operator-=(const BiCoeff& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiCoeff& BiCoeff::operator*=(const BiCoeff& o) {
    BiCoeff r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    }
    terms_ = std::move(r.terms_);
    return *this;
}

BiCoeff BiCoeff::operator-() const {
    BiCoeff r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

std::string monomial_name(int deg_d, int deg_D) {
    std::string s;
    auto factor = [&](const char* name, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
    };
    factor("d", deg_d);
    factor("D", deg_D);
    return s.empty() ? "1" : s;
}

namespace {

/// Appends "c*m" with sign handling; `first` controls the leading separator.
void append_term(std::string& out, const Rational& c, const std::string& m, bool first) {
    if (first) {
        if (c.sign() < 0) out += "-";
    } else {
        out += c.sign() < 0 ? " - " : " + ";
    }
    Rational a = c.abs();
    if (m.empty()) {
        out += a.to_string();
    } else if (a == Rational(1)) {
        out += m;
    } else {
        out += a.to_string() + "*" + m;
    }
}

std::string power_name(std::string_view var, std::size_t k) {
    if (k == 0) return {};
    std::string s(var);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

std::string BiCoeff::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string m = monomial_name(it->first.first, it->first.second);
        append_term(out, it->second, m == "1" ? std::string{} : m, first);
        first = false;
    }
    return out;
}

RatPoly rat_poly(std::initializer_list<long> coefficients) {
    std::vector<Rational> v;
    v.reserve(coefficients.size());
    for (long c : coefficients) v.emplace_back(c);
    return RatPoly(std::move(v));
}

std::string render(const RatPoly& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    auto cs = f.coefficients();
    for (std::size_t k = cs.size(); k-- > 0;) {
        if (cs[k].is_zero()) continue;
        append_term(out, cs[k], power_name(var, k), first);
        first = false;
    }
    return out;
}

std::string render(const BiCoeffPoly& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    auto cs = f.coefficients();
    for (std::size_t k = cs.size(); k-- > 0;) {
        const BiCoeff& c = cs[k];
        if (c.is_zero()) continue;
        std::string pw = power_name(var, k);
        if (c.terms().size() == 1) {
            const auto& [e, q] = *c.terms().begin();
            std::string m = monomial_name(e.first, e.second);
            std::string name = m == "1" ? pw : (pw.empty() ? m : m + "*" + pw);
            append_term(out, q, name, first);
        } else {
            out += first ? "" : " + ";
            out += "(" + c.to_string() + ")";
            if (!pw.empty()) out += "*" + pw;
        }
        first = false;
    }
    return out;
}

std::vector<std::string> coefficient_strings(const RatPoly& f) {
    std::vector<std::string> out;
    for (const auto& c : f.coefficients()) out.push_back(c.to_string());
    return out;
}

RatPoly substitute(const BiCoeffPoly& f, const Rational& d, const Rational& D) {
    return f.map([&](const BiCoeff& c) { return c.evaluate(d, D); });
}

namespace {

bool probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, or nullopt when the iteration budget runs out.
std::optional<Integer> rho_factor(const Integer& n) {
    constexpr long kBudget = 1L << 22;
    for (unsigned long c = 1; c < 20; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        auto step = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        long r = 1;
        long spent = 0;
        constexpr long kBatch = 128;
        while (g == 1 && spent < kBudget) {
            x = y;
            for (long i = 0; i < r; ++i) y = step(y);
            for (long k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                for (long i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = step(y);
                    Integer diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                spent += kBatch;
            }
            r *= 2;
        }
        if (g == n) {
            // The batch overshot; walk it again one step at a time.
            do {
                ys = step(ys);
                Integer diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return std::nullopt;
}

void split_into(const Integer& n, std::map<Integer, int>& primes) {
    if (n == 1) return;
    if (probable_prime(n)) {
        ++primes[n];
        return;
    }
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 2) != 0) {
        split_into(r, primes);
        split_into(r, primes);
        return;
    }
    auto f = rho_factor(n);
    if (!f) throw std::domain_error("cannot factor " + n.get_str());
    split_into(*f, primes);
    split_into(n / *f, primes);
}

std::vector<std::pair<Integer, int>> factorize(Integer n) {
    constexpr unsigned long kBound = 100'000;
    std::map<Integer, int> primes;
    if (sgn(n) < 0) n = -n;
    for (unsigned long f = 2; f <= kBound; f += (f == 2 ? 1 : 2)) {
        if (Integer(f) * f > n) break;
        int mult = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), f) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f);
            ++mult;
        }
        if (mult > 0) primes[Integer(f)] = mult;
    }
    split_into(n, primes);
    return {primes.begin(), primes.end()};
}

}  // namespace

std::vector<Integer> positive_divisors(const Integer& n) {
    if (n == 0) throw std::invalid_argument("divisors of zero");
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [prime, mult] : factorize(n)) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (int e = 1; e <= mult; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Rational> rational_roots(const RatPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");

    // Clear denominators.
    Integer lcm = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : f.coefficients()) ints.push_back(c.numerator() * (lcm / c.denominator()));

    std::set<Rational, std::less<>> roots;
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) roots.insert(Rational(0));
    if (static_cast<long>(low) == f.degree()) return {roots.begin(), roots.end()};

    std::vector<Rational> stripped;
    for (std::size_t i = low; i < ints.size(); ++i) stripped.emplace_back(ints[i]);
    RatPoly g(std::move(stripped));

    auto nums = positive_divisors(ints[low]);
    auto dens = positive_divisors(ints.back());
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            if (gcd(a, b) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand(s * a, b);
                if (g.evaluate(cand).is_zero()) roots.insert(cand);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace radred

namespace radred {

std::string render_with_content(const RatPoly& f, std::string_view var) {
    if (f.is_zero()) return "0";
    Integer lcm = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    Integer g = 0;
    for (const auto& c : f.coefficients()) {
        Integer n = c.numerator() * (lcm / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational content(g, lcm);
    if (f.leading().sign() < 0) content = -content;
    RatPoly primitive = content.inverse() * f;
    if (content == Rational(1)) return render(primitive, var);
    std::string body = "(" + render(primitive, var) + ")";
    if (content.numerator() == 1) return body + "/" + content.denominator().get_str();
    return content.to_string() + "*" + body;
}

}  // namespace radred
