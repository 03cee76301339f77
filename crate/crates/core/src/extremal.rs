//! Extremal constructions and the closed-form edge bounds they attain.
//!
//! Two families sit just below each bound. The clique-removal family EX_1
//! deletes the edges inside a set A of K_n: the join then has an independent
//! set too large to tile or to thread a cycle through. The isolated-vertex
//! family EX_2 keeps a set B with no edges into the rest (except, in the
//! factor version, through a small fully-joined set C): the join has too few
//! universal vertices to serve every vertex of B. Every bound evaluator
//! returns the exact piecewise value together with which family attains it.

use crate::choose2;
use crate::error::Error;
use crate::graph::Graph;
use crate::invariants::independence_number;
use crate::Rat;

// ================================================================
// Parameters for the K_r-factor problem
// ================================================================

/// Validated parameter triple for the K_r-factor deficiency bound:
/// `n >= 2`, `t >= 0`, `r >= 3`, `t < (r-1)n`, `r | (n+t)`.
///
/// Derived quantities: `k = ceil((t+1)/(r-1))`, `q = t mod (r-1)` and
/// `c = r-2-q`, with `k >= 1` and `0 <= q <= r-2` always.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RFactorParams {
    n: usize,
    t: usize,
    r: usize,
}

impl RFactorParams {
    pub fn new(n: usize, t: usize, r: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::input(format!("n = {n} < 2")));
        }
        if r < 3 {
            return Err(Error::input(format!("r = {r} < 3")));
        }
        if t >= (r - 1) * n {
            return Err(Error::input(format!(
                "t = {t} >= (r-1)n = {}: the join tiles trivially",
                (r - 1) * n
            )));
        }
        if (n + t) % r != 0 {
            return Err(Error::input(format!("r = {r} does not divide n+t = {}", n + t)));
        }
        Ok(RFactorParams { n, t, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn r(&self) -> usize {
        self.r
    }

    /// `k = ceil((t+1)/(r-1))`, the number of isolated vertices in EX_2.
    pub fn k(&self) -> usize {
        (self.t + 1).div_ceil(self.r - 1)
    }

    /// `q = t mod (r-1)`.
    pub fn q(&self) -> usize {
        self.t % (self.r - 1)
    }

    /// `c = r - 2 - q`, the number of universal vertices in EX_2.
    pub fn c(&self) -> usize {
        self.r - 2 - self.q()
    }

    /// `a = (n+t)/r + 1`, the independent set size in EX_1. Always at most
    /// `n`: the largest feasible t is (r-1)n - r, where a = n.
    pub fn a(&self) -> usize {
        (self.n + self.t) / self.r + 1
    }
}

// ================================================================
// Bound results
// ================================================================

/// Which extremal family attains a bound value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSide {
    Ex1,
    Ex2,
}

/// Echo of the inputs a bound was evaluated at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundParams {
    Kr { n: usize, t: usize, r: usize, k: usize, q: usize },
    Triangle { n: usize, t: usize, k: usize },
    Hamilton { n: usize, t: usize },
    Bandwidth { n: usize, t: usize, eps: Rat },
}

/// The exact value of a closed-form edge bound.
///
/// `value` is an edge count and integral for every bound except the
/// bandwidth one, whose slack term `eps * n^2` may be fractional. `side`
/// names the family whose edge count the active piece matches (ties go to
/// EX_1). `hypothesis_ok` is false when the evaluation point lies outside
/// the stated hypotheses of the underlying statement; the value is still
/// the displayed formula.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub value: Rat,
    pub side: BoundSide,
    pub hypothesis_ok: bool,
    pub params: BoundParams,
}

fn int(x: i64) -> Rat {
    Rat::from_integer(x)
}

/// Edge bound for K_r-factor deficiency: the maximum of the EX_1 and EX_2
/// closed forms, `max{C(n,2) - C((n+t)/r + 1, 2),
/// C(n,2) - C(k,2) - k(n - k - (r-2-q))}`.
pub fn kr_bound(p: &RFactorParams) -> BoundResult {
    let ex1 = ex1_factor_edges(p);
    let ex2 = ex2_factor_edges(p);
    let (value, side) = if ex1 >= ex2 {
        (ex1, BoundSide::Ex1)
    } else {
        (ex2, BoundSide::Ex2)
    };
    BoundResult {
        value: int(value),
        side,
        hypothesis_ok: true,
        params: BoundParams::Kr {
            n: p.n,
            t: p.t,
            r: p.r,
            k: p.k(),
            q: p.q(),
        },
    }
}

/// Closed form `e(EX_1(n,t,r)) = C(n,2) - C((n+t)/r + 1, 2)`.
pub fn ex1_factor_edges(p: &RFactorParams) -> i64 {
    choose2(p.n as i64) - choose2(p.a() as i64)
}

/// Closed form `e(EX_2(n,t,r)) = C(n,2) - C(k,2) - k(n - k - (r-2-q))`.
pub fn ex2_factor_edges(p: &RFactorParams) -> i64 {
    let (n, k, c) = (p.n as i64, p.k() as i64, p.c() as i64);
    choose2(n) - choose2(k) - k * (n - k - c)
}

/// Triangle-factor edge bound: `C(n,2) - C(k,2) - k(n-k)` for odd `t`,
/// `C(n,2) - C(k,2) - k(n-k-1)` for even `t`, with `k = ceil((t+1)/2)`.
/// Hypotheses flagged (not enforced): `3 | (n+t)` and `1000 t <= n`; the
/// statement also assumes n large, which is not a checkable input.
pub fn triangle_bound(n: usize, t: usize) -> BoundResult {
    let k = (t + 1).div_ceil(2);
    let (ni, ki) = (n as i64, k as i64);
    let slab = if t % 2 == 1 {
        ki * (ni - ki)
    } else {
        ki * (ni - ki - 1)
    };
    BoundResult {
        value: int(choose2(ni) - choose2(ki) - slab),
        side: BoundSide::Ex2,
        hypothesis_ok: (n + t) % 3 == 0 && 1000 * t <= n,
        params: BoundParams::Triangle { n, t, k },
    }
}

/// Hamiltonicity edge bound, piecewise on the parity of `n+t` and on the
/// thresholds `(n+4)/5` (even sum) and `(n+1)/5` (odd sum). At a threshold
/// both pieces agree. Unconditional: every integer pair is in hypothesis.
pub fn hamilton_bound(n: usize, t: usize) -> BoundResult {
    let (ni, ti) = (n as i64, t as i64);
    let base = choose2(ni);
    let ex2_missing = ti * (ni - 1) - choose2(ti);
    let (value, side) = if (n + t) % 2 == 0 {
        if 5 * ti <= ni + 4 {
            (base - ex2_missing, BoundSide::Ex2)
        } else {
            (base - (choose2((ni + ti + 2) / 2) - 1), BoundSide::Ex1)
        }
    } else if 5 * ti <= ni + 1 {
        (base - ex2_missing, BoundSide::Ex2)
    } else {
        (base - choose2((ni + ti + 1) / 2), BoundSide::Ex1)
    };
    BoundResult {
        value: int(value),
        side,
        hypothesis_ok: true,
        params: BoundParams::Hamilton { n, t },
    }
}

/// Bandwidth-embedding edge bound with slack `eps * n^2`, branching at
/// `t = n/5`: `C(n,2) - (t(n-1) - C(t,2) - eps n^2)` for `5t <= n`, else
/// `C(n,2) - (C(ceil((n+t)/2) + 1, 2) - eps n^2)`. Exact rational value.
pub fn bandwidth_bound(n: usize, t: usize, eps: Rat) -> Result<BoundResult, Error> {
    if eps <= int(0) {
        return Err(Error::input(format!("eps = {eps} must be positive")));
    }
    let (ni, ti) = (n as i64, t as i64);
    let slack = eps * int(ni) * int(ni);
    let base = int(choose2(ni));
    let (value, side) = if 5 * t <= n {
        (base - (int(ti * (ni - 1) - choose2(ti)) - slack), BoundSide::Ex2)
    } else {
        let a = (n + t).div_ceil(2) as i64 + 1;
        (base - (int(choose2(a)) - slack), BoundSide::Ex1)
    };
    Ok(BoundResult {
        value,
        side,
        hypothesis_ok: true,
        params: BoundParams::Bandwidth { n, t, eps },
    })
}

// ================================================================
// Constructions: K_r-factor family
// ================================================================

/// EX_1(n,t,r): K_n minus all edges inside `A = {0, ..., (n+t)/r}`
/// (the first `(n+t)/r + 1` vertices). The join EX_1 * K_t has no
/// K_r-factor: A stays independent, so each tile covers at most one of its
/// `(n+t)/r + 1` vertices, but there are only `(n+t)/r` tiles.
pub fn ex1_factor(p: &RFactorParams) -> Graph {
    clique_minus_independent(p.n, p.a())
}

/// EX_2(n,t,r): `k` isolated vertices `B = {0..k}`, a clique on the rest,
/// and every edge incident to `C = {k..k+c}` added, `c = r-2-q`. The join
/// has no K_r-factor: tiles covering B must spend r-1 universal vertices
/// each, and only `t + c` universal vertices exist, `k(r-1) = t-q+r-1 >
/// t+c`. The fit check `k + c <= n` is part of the contract but never
/// fires on validated params: the residue forces the largest feasible
/// write of t as a(r-1)+q to have a <= n+q-r, so k+c = a+r-1-q <= n-1.
pub fn ex2_factor(p: &RFactorParams) -> Result<Graph, Error> {
    let (k, c) = (p.k(), p.c());
    if k + c > p.n {
        return Err(Error::input(format!(
            "EX_2 classes do not fit: k + c = {} > n = {}",
            k + c,
            p.n
        )));
    }
    let mut g = Graph::empty(p.n);
    // Clique on everything outside B.
    for u in k..p.n {
        for v in (u + 1)..p.n {
            g.add_edge(u, v);
        }
    }
    // C is adjacent to all of B as well.
    for u in k..(k + c) {
        for v in 0..k {
            g.add_edge(u, v);
        }
    }
    debug_assert_eq!(g.edge_count() as i64, ex2_factor_edges(p));
    Ok(g)
}

// ================================================================
// Constructions: Hamiltonicity / bandwidth family
// ================================================================

/// EX_1(n,t) for spanning bipartite targets: K_n minus the edges inside the
/// first `ceil((n+t)/2) + 1` vertices. Requires `ceil((n+t)/2) < n`.
pub fn ex1_band(n: usize, t: usize) -> Result<Graph, Error> {
    let half = (n + t).div_ceil(2);
    if half >= n {
        return Err(Error::input(format!(
            "ceil((n+t)/2) = {half} must be below n = {n}"
        )));
    }
    Ok(clique_minus_independent(n, half + 1))
}

/// EX_2(n,t) for spanning bipartite targets: `t` isolated vertices plus a
/// clique on the remaining `n-t`. Requires `t <= n`. Its edge count is
/// `C(n,2) - (t(n-1) - C(t,2))`.
pub fn ex2_band(n: usize, t: usize) -> Result<Graph, Error> {
    if t > n {
        return Err(Error::input(format!("t = {t} exceeds n = {n}")));
    }
    let mut g = Graph::empty(n);
    for u in t..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    debug_assert_eq!(
        g.edge_count() as i64,
        choose2(n as i64) - ((t as i64) * (n as i64 - 1) - choose2(t as i64))
    );
    Ok(g)
}

// ================================================================
// Constructions: general H-factor family
// ================================================================

/// EX_H(n,t): K_n minus the edges inside the first
/// `alpha(H)(n+t)/|H| + 1` vertices. Requires `|H|` to divide
/// `alpha(H)(n+t)` and the removed set to fit inside `n` vertices.
/// With H = K_r this is exactly [`ex1_factor`].
pub fn ex_h(n: usize, t: usize, pattern: &Graph) -> Result<Graph, Error> {
    let a = ex_h_set_size(n, t, pattern)?;
    Ok(clique_minus_independent(n, a))
}

/// EX'_H(n,t) for the star H = K_{1,s}: EX_H plus a maximal matching on the
/// independent set A ((|A|/2 rounded down) edges: (0,1), (2,3), ...).
/// The join has no K_{1,s}-factor for s >= 2: a star covers at most s
/// vertices of A unless it lies inside A entirely, which the matching
/// cannot support, and s * (n+t)/(s+1) < |A|.
pub fn ex_h_prime(n: usize, t: usize, s: usize) -> Result<Graph, Error> {
    if s < 2 {
        return Err(Error::input(format!("star arity s = {s} must be at least 2")));
    }
    let star = star_graph(s);
    let a = ex_h_set_size(n, t, &star)?;
    let mut g = clique_minus_independent(n, a);
    let mut pair = 0;
    while pair + 1 < a {
        g.add_edge(pair, pair + 1);
        pair += 2;
    }
    Ok(g)
}

/// K_{1,s}: centre 0, leaves 1..=s.
pub fn star_graph(s: usize) -> Graph {
    let mut g = Graph::empty(s + 1);
    for leaf in 1..=s {
        g.add_edge(0, leaf);
    }
    g
}

fn ex_h_set_size(n: usize, t: usize, pattern: &Graph) -> Result<usize, Error> {
    if pattern.n() == 0 {
        return Err(Error::input("empty tile pattern"));
    }
    let alpha = independence_number(pattern)?;
    let num = alpha * (n + t);
    if num % pattern.n() != 0 {
        return Err(Error::input(format!(
            "alpha(H)(n+t) = {num} is not divisible by |H| = {}",
            pattern.n()
        )));
    }
    let a = num / pattern.n() + 1;
    if a > n {
        return Err(Error::input(format!(
            "independent set size {a} exceeds n = {n}"
        )));
    }
    Ok(a)
}

/// K_n with the edges inside `{0..a}` removed; the shared shape of every
/// EX_1-style construction.
fn clique_minus_independent(n: usize, a: usize) -> Graph {
    debug_assert!(a <= n);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if u >= a || v >= a {
                g.add_edge(u, v);
            }
        }
    }
    g
}

// ================================================================
// Arithmetic facts used by the EX_2 growth step
// ================================================================

/// The three parameter thresholds governing when shrinking n by one while
/// growing t by one keeps EX_2 extremal, as exact rationals:
/// `g = n - r - n/r`, `f1 = n(r-1)/(2r^2-2r+1) - r`, `f2 = n(r-1) - r^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct TechnicalQuantities {
    pub g: Rat,
    pub f1: Rat,
    pub f2: Rat,
}

/// Evaluate the thresholds at `(n, r)`, both at least 3.
pub fn technical_quantities(n: usize, r: usize) -> Result<TechnicalQuantities, Error> {
    if n < 3 || r < 3 {
        return Err(Error::input(format!("need n, r >= 3, got n = {n}, r = {r}")));
    }
    let (ni, ri) = (n as i64, r as i64);
    Ok(TechnicalQuantities {
        g: int(ni - ri) - Rat::new(ni, ri),
        f1: Rat::new(ni * (ri - 1), 2 * ri * ri - 2 * ri + 1) - int(ri),
        f2: int(ni * (ri - 1) - ri * ri),
    })
}

/// Threshold at which the EX_1 and EX_2 closed forms cross when
/// `(r-1) | (t+1)`: EX_1 <= EX_2 precisely for `t <= ((r-1)n - r^2) /
/// (2r^2 - 2r + 1)`.
pub fn ex1_ex2_crossover(n: usize, r: usize) -> Rat {
    let (ni, ri) = (n as i64, r as i64);
    Rat::new((ri - 1) * ni - ri * ri, 2 * ri * ri - 2 * ri + 1)
}

/// The concave quadratic from the bandwidth bound's optimization step:
/// `f(i) = i((1 - 2 gamma)(n+t) - i) - C(i, 2)`, generalized to rational
/// `i` via `C(i,2) = i(i-1)/2`. Its discrete second difference is the
/// constant -3, so it is strictly concave for every gamma.
pub fn proof_quadratic(i: Rat, n: usize, t: usize, gamma: Rat) -> Rat {
    let m = int((n + t) as i64);
    let coeff = (int(1) - int(2) * gamma) * m;
    i * (coeff - i) - i * (i - int(1)) / int(2)
}
