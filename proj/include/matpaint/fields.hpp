#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matpaint/error.hpp"

namespace matpaint {

// The five coefficient domains: the three finite fields named by the theory,
// plus two partial fields, (Z, {+1,-1}) and (Z[z], <z>) with z a primitive
// sixth root of unity.
enum class Domain : std::uint8_t { GF2, GF3, GF4, Regular, SixthRoot };

bool is_field(Domain d);
const char* domain_name(Domain d);          // gf2 | gf3 | gf4 | regular | sixth_root
Domain domain_from_name(const std::string&);  // ParseError on unknown tag

// Exact element of one of the domains.
//   GF2/GF3   : a = canonical residue, b = 0
//   GF4       : a + b*x with x^2 = x + 1, a,b in {0,1}
//   Regular   : a in Z
//   SixthRoot : a + b*z in Z[z] with z^2 = z - 1
struct Value {
    Domain dom = Domain::GF2;
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const Value&, const Value&) = default;
};

Value zero(Domain d);
Value one(Domain d);
Value neg_one(Domain d);

Value add(const Value& x, const Value& y);
Value sub(const Value& x, const Value& y);
Value mul(const Value& x, const Value& y);
Value neg(const Value& x);
Value inv(const Value& x);                 // NotAUnit unless x is invertible
Value div(const Value& x, const Value& y); // x * inv(y)

bool is_zero(const Value& x);
bool is_one(const Value& x);

// Membership in k* (fields) resp. the unit group S (partial fields).
bool is_unit_value(const Value& x);

// The allowed painting values, in canonical enumeration order.
std::vector<Value> units_of(Domain d);

// Canonical text rendering: GF4 as 0,1,x,x+1; SixthRoot units as z^0..z^5;
// Regular as signed integers. parse_value inverts render exactly.
std::string render(const Value& x);
Value parse_value(Domain d, const std::string& text);

// Field automorphism: identity everywhere except GF4, which also has the
// Frobenius x -> x^2.
struct Automorphism {
    Domain dom = Domain::GF3;
    bool frobenius = false;

    Value apply(const Value& x) const;
    Automorphism inverse() const { return *this; }  // both automorphisms are involutions

    friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

std::vector<Automorphism> automorphisms_of(Domain d);  // fields only

}  // namespace matpaint
