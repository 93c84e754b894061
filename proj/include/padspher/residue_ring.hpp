#pragma once

#include "padspher/errors.hpp"
#include "padspher/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace padspher {

/// Arithmetic context for O/p^m and, when ext is set, for its unramified
/// quadratic extension (O/p^m)[X]/(X^2 - rho) with rho a quadratic
/// non-residue mod p.  Elements are a + bX with a, b in [0, p^m); the base
/// ring keeps b = 0.
struct RingCtx {
    long p = 3;
    int m = 1;
    bool ext = false;
    std::uint64_t pm = 3;   // p^m
    std::uint64_t rho = 0;  // non-residue, only when ext

    static RingCtx base(long p, int m);
    static RingCtx quadratic(long p, int m);

    std::uint64_t reduce(const Integer& v) const;
};

struct El {
    std::uint64_t a = 0, b = 0;
    bool operator==(const El&) const = default;
};

El el_add(const RingCtx& R, El x, El y);
El el_sub(const RingCtx& R, El x, El y);
El el_mul(const RingCtx& R, El x, El y);
El el_neg(const RingCtx& R, El x);
El el_conj(const RingCtx& R, El x);  // a - bX
bool el_is_unit(const RingCtx& R, El x);

/// p-adic valuation of a base-ring residue: the largest v < m with p^v
/// dividing it, or m for the zero residue ("at least m").
int residue_valuation(const RingCtx& R, std::uint64_t v);

/// Legendre symbol of a unit mod p: +1 or -1.
int quadratic_character(long p, std::uint64_t unit);

/// Square matrix over the ring, dimension <= 4.
struct Mat {
    int n = 0;
    std::array<El, 16> e{};
    El& at(int i, int j) { return e[i * n + j]; }
    const El& at(int i, int j) const { return e[i * n + j]; }
    bool operator==(const Mat&) const = default;
    static Mat identity(int n);
};

Mat mat_mul(const RingCtx& R, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
Mat mat_conj_transpose(const RingCtx& R, const Mat& A);
El mat_det(const RingCtx& R, const Mat& A);

/// |GL_n(O/p^m)| over the context's residue ring (with p^2 replacing p in
/// the quadratic-extension case).
Integer gl_order(const RingCtx& R, int n);

/// Generators of GL_n over the context ring: elementary matrices with
/// entries 1 (and X in the extension) plus diagonal unit generators.
std::vector<Mat> gl_generators(const RingCtx& R, int n);

/// Multiplicative generator of (Z/p^m)^x (p odd).
std::uint64_t primitive_root(long p, int m);

} // namespace padspher
