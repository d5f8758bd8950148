#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

using Int = boost::multiprecision::cpp_int;

// Half-integer exponent p/2, stored as the numerator p.
struct HalfInt {
    long long twice = 0;

    static HalfInt whole(long long k) { return HalfInt{2 * k}; }
    static HalfInt halves(long long p) { return HalfInt{p}; }

    bool is_whole() const { return twice % 2 == 0; }

    HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    HalfInt operator-() const { return HalfInt{-twice}; }
    bool operator==(const HalfInt&) const = default;
    bool operator<(HalfInt o) const { return twice < o.twice; }
};

// Laurent polynomial in q^{1/2}: twice-exponent -> coefficient.
class LaurentQ {
public:
    LaurentQ() = default;

    static LaurentQ constant(Int c);
    static LaurentQ q_power(long long twice_exponent);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long long, Int>& coefficients() const { return coeffs_; }

    LaurentQ operator-() const;
    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ operator+(const LaurentQ& o) const;
    LaurentQ operator-(const LaurentQ& o) const;
    LaurentQ operator*(const LaurentQ& o) const;
    bool operator==(const LaurentQ& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    std::map<long long, Int> coeffs_;
    void strip_zeros();
};

// A named generator class.  mu_order > 1 marks a class with nontrivial cyclic
// monodromy (the built-in MU(n) family has mu_order n).
struct Atom {
    std::string name;
    long long euler = 0;
    int mu_order = 1;
    std::optional<LaurentQ> poincare;
    std::optional<int> dim;
};

// Formal unit attached to a principal Z2-bundle; squares to 1 under the smash
// product.  Only the +-1 Euler specialization of the unit is user data.
struct BundleGenerator {
    std::string name;
    int euler_sign = +1;
};

// Lookup table for atoms and bundle generators.  Default-constructed tables
// carry the built-ins: PT, MU1..MU12, GM.
class AtomTable {
public:
    AtomTable();

    void add_atom(Atom a);
    void add_bundle(BundleGenerator g);

    const Atom* find_atom(std::string_view name) const;
    const BundleGenerator* find_bundle(std::string_view name) const;

    const std::map<std::string, Atom, std::less<>>& atoms() const { return atoms_; }
    const std::map<std::string, BundleGenerator, std::less<>>& bundles() const { return bundles_; }

private:
    std::map<std::string, Atom, std::less<>> atoms_;
    std::map<std::string, BundleGenerator, std::less<>> bundles_;
};

// One atom occurrence inside a term.  The monodromy order travels with the
// name so products can be checked without a table lookup.
struct TermAtom {
    std::string name;
    int mu_order = 1;

    bool operator==(const TermAtom& o) const { return name == o.name && mu_order == o.mu_order; }
    bool operator<(const TermAtom& o) const {
        if (name != o.name) return name < o.name;
        return mu_order < o.mu_order;
    }
};

// Monomial of the ring: a multiset of atoms, a power of L, and a set of
// Z2-bundle units (exponents already reduced mod 2).
// Invariants: atoms sorted, never the point class, at most one entry with
// mu_order > 1; units sorted and duplicate-free.
struct Term {
    std::vector<TermAtom> atoms;
    HalfInt lpow;
    std::vector<std::string> units;

    bool monodromic() const;
    bool operator==(const Term& o) const;
    // Canonical order: atoms lexicographically, then lpow descending, then units.
    bool operator<(const Term& o) const;
};

// Element of the localized equivariant Grothendieck ring with L^{1/2}
// inverted, in normal form: no zero coefficients, terms canonically ordered.
class MotivicClass {
public:
    MotivicClass() = default; // zero

    static MotivicClass integer(Int n);
    static MotivicClass one() { return integer(1); }
    static MotivicClass lefschetz(HalfInt exponent); // L^{exponent}
    static MotivicClass atom_class(const Atom& a);
    static MotivicClass unit_class(const std::string& generator_name);
    static MotivicClass from_term(Term t, Int coefficient);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Term, Int>& terms() const { return terms_; }

    MotivicClass operator-() const;
    MotivicClass& operator+=(const MotivicClass& o);
    MotivicClass& operator-=(const MotivicClass& o);
    MotivicClass operator+(const MotivicClass& o) const;
    MotivicClass operator-(const MotivicClass& o) const;

    // Smash product.  Bilinear; atoms combine by multiset union, L-powers
    // add, units by symmetric difference.  Throws UnsupportedSmash when both
    // factors of a term pair carry nontrivial monodromy.
    MotivicClass smash(const MotivicClass& o) const;
    MotivicClass operator*(const MotivicClass& o) const { return smash(o); }

    bool operator==(const MotivicClass& o) const { return terms_ == o.terms_; }

private:
    std::map<Term, Int> terms_;
    void insert(Term t, Int c);
};

// Motive of the principal Z2-bundle named by `g`, as a unit multiplying
// `base`; u_g * u_g collapses to the identity.  `base` must carry no units.
MotivicClass upsilon(const BundleGenerator& g, const MotivicClass& base);

// L^{p/2} -> (-1)^p, atom -> declared euler number, unit -> declared sign.
Int euler_specialize(const MotivicClass& x, const AtomTable& table);

// L^{p/2} -> q^{p/2}, atom -> declared Poincare polynomial.  Rejects classes
// with units or monodromic atoms.
LaurentQ weight_specialize(const MotivicClass& x, const AtomTable& table);

// Optional rewrite [MU2] = 1 - L^{1/2}; off by default everywhere.
MotivicClass rewrite_mu2(const MotivicClass& x);

// Deterministic canonical form; parse(print_canonical(x)) == x.
std::string print_canonical(const MotivicClass& x);

// x^e by repeated smash; e >= 0.
MotivicClass pow_class(const MotivicClass& x, long long e);

} // namespace motivic
