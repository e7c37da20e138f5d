#include "radred/expr.hpp"

namespace radred {

Expr Expr::rational(radred::Rational q) {
    Expr e;
    e.kind = Kind::Rational;
    e.value = std::move(q);
    return e;
}

Expr Expr::sqrt(Expr arg) {
    Expr e;
    e.kind = Kind::Sqrt;
    e.children.push_back(std::move(arg));
    return e;
}

Expr Expr::nth_root(Expr arg, long n) {
    if (n < 2) throw std::invalid_argument("root index must be >= 2");
    Expr e;
    e.kind = Kind::NthRoot;
    e.index = n;
    e.children.push_back(std::move(arg));
    return e;
}

Expr Expr::add(std::vector<Expr> terms) {
    Expr e;
    e.kind = Kind::Add;
    e.children = std::move(terms);
    return e;
}

Expr Expr::mul(std::vector<Expr> factors) {
    Expr e;
    e.kind = Kind::Mul;
    e.children = std::move(factors);
    return e;
}

Expr Expr::pow(Expr base, long exponent) {
    Expr e;
    e.kind = Kind::Pow;
    e.index = exponent;
    e.children.push_back(std::move(base));
    return e;
}

Expr Expr::symbol(std::string name) {
    Expr e;
    e.kind = Kind::Symbol;
    e.name = std::move(name);
    return e;
}

bool operator==(const Expr& x, const Expr& y) {
    return x.kind == y.kind && x.value == y.value && x.index == y.index && x.name == y.name &&
           x.children == y.children;
}

namespace {

const char* kind_name(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Rational: return "rational";
        case Expr::Kind::Sqrt: return "sqrt";
        case Expr::Kind::NthRoot: return "nth-root";
        case Expr::Kind::Add: return "add";
        case Expr::Kind::Mul: return "mul";
        case Expr::Kind::Pow: return "pow";
        case Expr::Kind::Symbol: return "symbol";
    }
    return "?";
}

}  // namespace

std::string Expr::to_text() const {
    switch (kind) {
        case Kind::Rational:
            return value.to_string();
        case Kind::Sqrt:
            return "sqrt(" + children[0].to_text() + ")";
        case Kind::NthRoot:
            return "root(" + children[0].to_text() + ", " + std::to_string(index) + ")";
        case Kind::Symbol:
            return name;
        case Kind::Pow: {
            const Expr& b = children[0];
            std::string base = (b.kind == Kind::Rational && !b.value.is_integer()) || b.kind == Kind::Add ||
                                       b.kind == Kind::Mul || b.kind == Kind::Pow ||
                                       (b.kind == Kind::Rational && b.value.sign() < 0)
                                   ? "(" + b.to_text() + ")"
                                   : b.to_text();
            return base + "^" + (index < 0 ? "(" + std::to_string(index) + ")" : std::to_string(index));
        }
        case Kind::Add: {
            if (children.empty()) return "0";
            std::string s = children[0].to_text();
            for (std::size_t i = 1; i < children.size(); ++i) {
                std::string t = children[i].to_text();
                if (!t.empty() && t[0] == '-') {
                    s += " - " + t.substr(1);
                } else {
                    s += " + " + t;
                }
            }
            return s;
        }
        case Kind::Mul: {
            if (children.empty()) return "1";
            std::string s;
            for (std::size_t i = 0; i < children.size(); ++i) {
                const Expr& c = children[i];
                std::string t;
                if (i == 0 && c.kind == Kind::Rational) {
                    t = c.to_text();
                } else if (c.kind == Kind::Add || (c.kind == Kind::Rational && c.value.sign() < 0)) {
                    t = "(" + c.to_text() + ")";
                } else {
                    t = c.to_text();
                }
                if (i > 0) s += "*";
                s += t;
            }
            return s;
        }
    }
    return {};
}

ordered_json to_json(const Expr& e) {
    ordered_json j;
    j["kind"] = kind_name(e.kind);
    switch (e.kind) {
        case Expr::Kind::Rational:
            j["value"] = e.value.to_string();
            break;
        case Expr::Kind::Sqrt:
            j["arg"] = to_json(e.children[0]);
            break;
        case Expr::Kind::NthRoot:
            j["index"] = e.index;
            j["arg"] = to_json(e.children[0]);
            break;
        case Expr::Kind::Pow:
            j["exponent"] = e.index;
            j["base"] = to_json(e.children[0]);
            break;
        case Expr::Kind::Symbol:
            j["name"] = e.name;
            break;
        case Expr::Kind::Add:
        case Expr::Kind::Mul: {
            ordered_json arr = ordered_json::array();
            for (const auto& c : e.children) arr.push_back(to_json(c));
            j[e.kind == Expr::Kind::Add ? "terms" : "factors"] = std::move(arr);
            break;
        }
    }
    return j;
}

Expr expr_from_json(const ordered_json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "rational") return Expr::rational(Rational::parse(j.at("value").get<std::string>()));
        if (kind == "sqrt") return Expr::sqrt(expr_from_json(j.at("arg")));
        if (kind == "nth-root") return Expr::nth_root(expr_from_json(j.at("arg")), j.at("index").get<long>());
        if (kind == "pow") return Expr::pow(expr_from_json(j.at("base")), j.at("exponent").get<long>());
        if (kind == "symbol") return Expr::symbol(j.at("name").get<std::string>());
        if (kind == "add" || kind == "mul") {
            std::vector<Expr> children;
            for (const auto& c : j.at(kind == "add" ? "terms" : "factors")) children.push_back(expr_from_json(c));
            return kind == "add" ? Expr::add(std::move(children)) : Expr::mul(std::move(children));
        }
        throw ParseError("unknown expression kind '" + kind + "'");
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed expression: ") + ex.what());
    }
}

Expr scaled_sqrt(const radred::Rational& q, const radred::Rational& R) {
    if (q.is_zero() || R.is_zero()) return Expr::rational(0);
    if (auto root = rational_is_square(R)) return Expr::rational(q * *root);
    auto [scale, rest] = split_square(R);
    radred::Rational m(rest);
    radred::Rational coeff = q * scale;
    if (coeff == radred::Rational(1)) return Expr::sqrt(Expr::rational(m));
    return Expr::mul({Expr::rational(coeff), Expr::sqrt(Expr::rational(m))});
}

numeric::BigFloat evaluate(const Expr& e, long bits, const Bindings& bindings) {
    using numeric::BigFloat;
    switch (e.kind) {
        case Expr::Kind::Rational:
            return BigFloat(e.value, bits);
        case Expr::Kind::Sqrt:
            return numeric::sqrt(evaluate(e.children[0], bits, bindings));
        case Expr::Kind::NthRoot:
            return numeric::nth_root(evaluate(e.children[0], bits, bindings), e.index);
        case Expr::Kind::Pow:
            return numeric::pow(evaluate(e.children[0], bits, bindings), e.index);
        case Expr::Kind::Symbol: {
            auto it = bindings.find(e.name);
            if (it == bindings.end()) throw std::invalid_argument("unbound symbol '" + e.name + "'");
            return it->second(bits);
        }
        case Expr::Kind::Add: {
            BigFloat acc(bits);
            for (const auto& c : e.children) acc += evaluate(c, bits, bindings);
            return acc;
        }
        case Expr::Kind::Mul: {
            BigFloat acc(1, bits);
            for (const auto& c : e.children) acc *= evaluate(c, bits, bindings);
            return acc;
        }
    }
    throw std::logic_error("unhandled expression kind");
}

numeric::BigFloat evaluate_checked(const Expr& e, long bits, long tolerance_exp, const Bindings& bindings) {
    numeric::BigFloat low = evaluate(e, bits, bindings);
    numeric::BigFloat high = evaluate(e, 2 * bits, bindings);
    if (!numeric::within(high - low, tolerance_exp, high)) {
        throw numeric::PrecisionError("values at " + std::to_string(bits) + " and " + std::to_string(2 * bits) +
                                      " bits disagree: " + low.to_string() + " vs " + high.to_string());
    }
    numeric::BigFloat out(bits);
    mpfr_set(out.raw(), high.raw(), MPFR_RNDN);
    return out;
}

}  // namespace radred
