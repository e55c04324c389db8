#include "matpaint/fields.hpp"

#include <array>

namespace matpaint {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

void require_same(const Value& x, const Value& y) {
    if (x.dom != y.dom)
        fail(Errc::MixedDomains, std::string("cannot combine ") + domain_name(x.dom) + " with " +
                                     domain_name(y.dom));
}

}  // namespace

bool is_field(Domain d) { return d == Domain::GF2 || d == Domain::GF3 || d == Domain::GF4; }

const char* domain_name(Domain d) {
    switch (d) {
        case Domain::GF2: return "gf2";
        case Domain::GF3: return "gf3";
        case Domain::GF4: return "gf4";
        case Domain::Regular: return "regular";
        case Domain::SixthRoot: return "sixth_root";
    }
    return "?";
}

Domain domain_from_name(const std::string& s) {
    if (s == "gf2") return Domain::GF2;
    if (s == "gf3") return Domain::GF3;
    if (s == "gf4") return Domain::GF4;
    if (s == "regular") return Domain::Regular;
    if (s == "sixth_root") return Domain::SixthRoot;
    fail(Errc::ParseError, "unknown field tag '" + s + "'");
}

Value zero(Domain d) { return Value{d, 0, 0}; }
Value one(Domain d) { return Value{d, 1, 0}; }

Value neg_one(Domain d) {
    switch (d) {
        case Domain::GF2: return Value{d, 1, 0};
        case Domain::GF3: return Value{d, 2, 0};
        case Domain::GF4: return Value{d, 1, 0};
        case Domain::Regular: return Value{d, -1, 0};
        case Domain::SixthRoot: return Value{d, -1, 0};
    }
    return zero(d);
}

Value add(const Value& x, const Value& y) {
    require_same(x, y);
    switch (x.dom) {
        case Domain::GF2: return Value{x.dom, (x.a + y.a) & 1, 0};
        case Domain::GF3: return Value{x.dom, mod(x.a + y.a, 3), 0};
        case Domain::GF4: return Value{x.dom, (x.a + y.a) & 1, (x.b + y.b) & 1};
        case Domain::Regular: return Value{x.dom, x.a + y.a, 0};
        case Domain::SixthRoot: return Value{x.dom, x.a + y.a, x.b + y.b};
    }
    return zero(x.dom);
}

Value neg(const Value& x) {
    switch (x.dom) {
        case Domain::GF2:
        case Domain::GF4: return x;  // characteristic 2
        case Domain::GF3: return Value{x.dom, mod(-x.a, 3), 0};
        case Domain::Regular: return Value{x.dom, -x.a, 0};
        case Domain::SixthRoot: return Value{x.dom, -x.a, -x.b};
    }
    return x;
}

Value sub(const Value& x, const Value& y) { return add(x, neg(y)); }

Value mul(const Value& x, const Value& y) {
    require_same(x, y);
    switch (x.dom) {
        case Domain::GF2: return Value{x.dom, x.a & y.a, 0};
        case Domain::GF3: return Value{x.dom, mod(x.a * y.a, 3), 0};
        case Domain::GF4: {
            // (a1 + b1 x)(a2 + b2 x) with x^2 = x + 1
            std::int64_t a = (x.a * y.a + x.b * y.b) & 1;
            std::int64_t b = (x.a * y.b + x.b * y.a + x.b * y.b) & 1;
            return Value{x.dom, a, b};
        }
        case Domain::Regular: return Value{x.dom, x.a * y.a, 0};
        case Domain::SixthRoot: {
            // (a1 + b1 z)(a2 + b2 z) with z^2 = z - 1
            std::int64_t a = x.a * y.a - x.b * y.b;
            std::int64_t b = x.a * y.b + x.b * y.a + x.b * y.b;
            return Value{x.dom, a, b};
        }
    }
    return zero(x.dom);
}

bool is_zero(const Value& x) { return x.a == 0 && x.b == 0; }
bool is_one(const Value& x) { return x.a == 1 && x.b == 0; }

std::vector<Value> units_of(Domain d) {
    switch (d) {
        case Domain::GF2: return {one(d)};
        case Domain::GF3: return {Value{d, 1, 0}, Value{d, 2, 0}};
        case Domain::GF4: return {Value{d, 1, 0}, Value{d, 0, 1}, Value{d, 1, 1}};
        case Domain::Regular: return {Value{d, 1, 0}, Value{d, -1, 0}};
        case Domain::SixthRoot: {
            // z^0 .. z^5 in Eisenstein coordinates
            std::vector<Value> out;
            Value p = one(d);
            Value z = Value{d, 0, 1};
            for (int i = 0; i < 6; ++i) {
                out.push_back(p);
                p = mul(p, z);
            }
            return out;
        }
    }
    return {};
}

bool is_unit_value(const Value& x) {
    if (is_field(x.dom)) return !is_zero(x);
    for (const Value& u : units_of(x.dom))
        if (u == x) return true;
    return false;
}

Value inv(const Value& x) {
    if (!is_unit_value(x)) fail(Errc::NotAUnit, "no inverse of " + render(x) + " in " + domain_name(x.dom));
    for (const Value& u : units_of(x.dom))
        if (is_one(mul(x, u))) return u;
    fail(Errc::Internal, "unit without inverse");
}

Value div(const Value& x, const Value& y) { return mul(x, inv(y)); }

std::string render(const Value& x) {
    switch (x.dom) {
        case Domain::GF2:
        case Domain::GF3: return std::to_string(x.a);
        case Domain::GF4:
            if (x.b == 0) return std::to_string(x.a);
            return x.a == 0 ? "x" : "x+1";
        case Domain::Regular: return std::to_string(x.a);
        case Domain::SixthRoot: {
            if (is_zero(x)) return "0";
            auto units = units_of(x.dom);
            for (int i = 0; i < 6; ++i)
                if (units[size_t(i)] == x) return "z^" + std::to_string(i);
            // non-unit ring element; only shows up in diagnostics
            return std::to_string(x.a) + "+" + std::to_string(x.b) + "z";
        }
    }
    return "?";
}

Value parse_value(Domain d, const std::string& text) {
    switch (d) {
        case Domain::GF2:
            if (text == "0" || text == "1") return Value{d, text[0] - '0', 0};
            break;
        case Domain::GF3:
            if (text == "0" || text == "1" || text == "2") return Value{d, text[0] - '0', 0};
            break;
        case Domain::GF4:
            if (text == "0") return zero(d);
            if (text == "1") return one(d);
            if (text == "x") return Value{d, 0, 1};
            if (text == "x+1") return Value{d, 1, 1};
            break;
        case Domain::Regular: {
            try {
                size_t used = 0;
                std::int64_t v = std::stoll(text, &used);
                if (used == text.size()) return Value{d, v, 0};
            } catch (const std::exception&) {
            }
            break;
        }
        case Domain::SixthRoot: {
            if (text == "0") return zero(d);
            if (text.size() == 3 && text[0] == 'z' && text[1] == '^' && text[2] >= '0' && text[2] <= '5')
                return units_of(d)[size_t(text[2] - '0')];
            break;
        }
    }
    fail(Errc::ParseError, std::string("bad ") + domain_name(d) + " value '" + text + "'");
}

Value Automorphism::apply(const Value& x) const {
    if (x.dom != dom) fail(Errc::MixedDomains, "automorphism applied to wrong domain");
    if (!frobenius) return x;
    // GF4 Frobenius: (a + bx)^2 = (a+b) + bx
    return Value{x.dom, (x.a + x.b) & 1, x.b};
}

std::vector<Automorphism> automorphisms_of(Domain d) {
    if (!is_field(d)) fail(Errc::BadParameters, "automorphisms only listed for fields");
    std::vector<Automorphism> out{Automorphism{d, false}};
    if (d == Domain::GF4) out.push_back(Automorphism{d, true});
    return out;
}

}  // namespace matpaint
