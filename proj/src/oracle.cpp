#include "harmonica/oracle.hpp"

#include "harmonica/errors.hpp"

#include <sstream>

namespace harmonica {

std::string to_string(SumKind k) {
    switch (k) {
        case SumKind::G: return "G";
        case SumKind::V: return "V";
        case SumKind::R2: return "R2";
        case SumKind::R3: return "R3";
        case SumKind::Mixed: return "MIXED";
    }
    return "?";
}

std::string SumSpec::describe() const {
    std::ostringstream os;
    os << to_string(kind) << "(n=" << n;
    if (kind == SumKind::Mixed) {
        os << ",shift=" << shift << ")";
        return os.str();
    }
    os << ",p=" << p << ",q=" << q;
    if (w != 0) os << ",w=" << w;
    if (y != 0) os << ",y=" << y;
    os << ",r=" << r << ",s=" << s;
    if (w != 0) os << ",u=" << u;
    if (y != 0) os << ",x=" << x;
    if (kind == SumKind::G || kind == SumKind::V) {
        os << ",m=" << m;
        if (shift != 0) os << ",hshift=" << shift;
    }
    os << ")";
    return os.str();
}

SumSpec g_spec(std::int64_t n, int p, int q, std::int64_t r, std::int64_t s, int m) {
    SumSpec spec;
    spec.kind = SumKind::G;
    spec.n = n; spec.p = p; spec.q = q; spec.r = r; spec.s = s; spec.m = m;
    return spec;
}

SumSpec v_spec(std::int64_t n, int p, int q, std::int64_t r, std::int64_t s, int m) {
    SumSpec spec = g_spec(n, p, q, r, s, m);
    spec.kind = SumKind::V;
    return spec;
}

SumSpec r2_spec(std::int64_t n, int p, int q, std::int64_t r, std::int64_t s) {
    SumSpec spec;
    spec.kind = SumKind::R2;
    spec.n = n; spec.p = p; spec.q = q; spec.r = r; spec.s = s;
    return spec;
}

SumSpec r3_spec(std::int64_t n, int p, int q, int w, std::int64_t r, std::int64_t s,
                std::int64_t u) {
    SumSpec spec;
    spec.kind = SumKind::R3;
    spec.n = n; spec.p = p; spec.q = q; spec.w = w; spec.r = r; spec.s = s; spec.u = u;
    return spec;
}

SumSpec mixed_spec(std::int64_t n, int shift) {
    SumSpec spec;
    spec.kind = SumKind::Mixed;
    spec.n = n; spec.shift = shift;
    return spec;
}

namespace {

Int denom_at(const SumSpec& spec, std::int64_t j) {
    Int d = ipow(Int(j + spec.r), spec.p) * ipow(Int(j + spec.s), spec.q);
    if (spec.w != 0) d *= ipow(Int(j + spec.u), spec.w);
    if (spec.y != 0) d *= ipow(Int(j + spec.x), spec.y);
    return d;
}

} // namespace

Rational summand(const SumSpec& spec, std::int64_t j, const HarmonicTable& table) {
    switch (spec.kind) {
        case SumKind::G:
            return table.at(j + spec.shift, spec.m) / Rational(denom_at(spec, j));
        case SumKind::V: {
            const Rational& h = table.at(j + spec.shift, spec.m);
            return h * h / Rational(denom_at(spec, j));
        }
        case SumKind::R2:
        case SumKind::R3:
            return Rational(1, denom_at(spec, j));
        case SumKind::Mixed:
            return table.at(j + spec.shift, 1) * table.at(j + spec.shift, 2) / Rational(j);
    }
    throw std::logic_error("summand: bad kind");
}

Rational direct_eval(const SumSpec& spec, const HarmonicTable& table) {
    // Fail on capacity up front rather than mid-sum.
    if (spec.n > 0) {
        if (spec.kind == SumKind::G || spec.kind == SumKind::V) {
            (void)table.at(spec.n + spec.shift, spec.m);
        } else if (spec.kind == SumKind::Mixed) {
            (void)table.at(spec.n + spec.shift, 1);
            (void)table.at(spec.n + spec.shift, 2);
        }
    }
    Rational acc = 0;
    for (std::int64_t j = 1; j <= spec.n; ++j) acc += summand(spec, j, table);
    return acc;
}

} // namespace harmonica
