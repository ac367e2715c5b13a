//! Shared brute-force oracles for the integration suites.
//!
//! Everything in this module is implemented independently of the library
//! under test: naive enumeration, a tiny standalone finite-field arithmetic,
//! and a deterministic PRNG. The oracles are intentionally slow and simple;
//! they exist so the fast library algorithms can be checked against
//! exhaustive ground truth on small inputs.
#![allow(dead_code)]

use num::rational::Ratio;
use num::Zero;

pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

// ---------------------------------------------------------------------------
// Deterministic PRNG (splitmix64) for the counted random suites.
// ---------------------------------------------------------------------------

pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Sort (slope, multiplicity) pairs and merge equal slopes.
pub fn sort_merge(mut pairs: Vec<(Q, u64)>) -> Vec<(Q, u64)> {
    pairs.sort();
    let mut merged: Vec<(Q, u64)> = Vec::new();
    for (s, m) in pairs {
        if let Some(last) = merged.last_mut() {
            if last.0 == s {
                last.1 += m;
                continue;
            }
        }
        merged.push((s, m));
    }
    merged
}

// ---------------------------------------------------------------------------
// Binomial coefficients (exact, u64).
// ---------------------------------------------------------------------------

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// Exterior-power oracle: brute force over all n-element index combinations.
// ---------------------------------------------------------------------------

/// All sums of `n`-element sub-multisets of `slopes` (given expanded, one
/// entry per multiplicity), returned sorted with repetitions.
pub fn exterior_power_brute(slopes: &[Q], n: usize) -> Vec<Q> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    if n == 0 || n > slopes.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| slopes[i]).sum());
        // advance the combination odometer
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if idx[i] != i + slopes.len() - n {
                idx[i] += 1;
                for j in i + 1..n {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Upmost-integral-minorant oracle: exhaustive enumeration of convex
// integer-slope lattice paths below a given convex lattice polygon.
// ---------------------------------------------------------------------------

/// Heights of a convex lattice polygon at every integer x in `0..=xmax`,
/// computed from its vertex list by linear interpolation. Because all
/// vertices are lattice points, the polygon is linear on each unit interval,
/// so dominance below the polygon only needs checking at integer x.
pub fn heights_at_integers(vertices: &[(i64, i64)]) -> Vec<Q> {
    let xmax = vertices.last().unwrap().0;
    let mut out = Vec::with_capacity(xmax as usize + 1);
    for x in 0..=xmax {
        let mut seg = None;
        for w in vertices.windows(2) {
            if w[0].0 <= x && x <= w[1].0 {
                seg = Some((w[0], w[1]));
                break;
            }
        }
        let h = match seg {
            Some(((x0, y0), (x1, y1))) => {
                Q::from_integer(y0)
                    + Ratio::new(y1 - y0, x1 - x0) * (Q::from_integer(x) - Q::from_integer(x0))
            }
            None => Q::from_integer(vertices[0].1), // single-vertex polygon
        };
        out.push(h);
    }
    out
}

/// Enumerate every convex path `y_0 = 0, y_{x+1} = y_x + s_x` with integer
/// nondecreasing nonnegative slope increments, staying (weakly) below the
/// given integer-x height profile, and ending exactly at the profile's
/// endpoint. Returns the list of height vectors.
pub fn enumerate_integral_minorants(heights: &[Q]) -> Vec<Vec<i64>> {
    let xmax = heights.len() - 1;
    let y_end = *heights[xmax].numer(); // endpoint is a lattice point
    assert!(heights[xmax].is_integer());
    let mut results = Vec::new();
    let mut path = vec![0i64];
    fn rec(
        heights: &[Q],
        xmax: usize,
        y_end: i64,
        min_slope: i64,
        path: &mut Vec<i64>,
        results: &mut Vec<Vec<i64>>,
    ) {
        let x = path.len() - 1;
        let y = *path.last().unwrap();
        if x == xmax {
            if y == y_end {
                results.push(path.clone());
            }
            return;
        }
        let remaining = (xmax - x) as i64;
        // Slopes are nondecreasing, so every later step is >= s; the path can
        // only reach y_end if y + s*remaining <= y_end.
        let mut s = min_slope;
        loop {
            if y + s * remaining > y_end {
                break;
            }
            let y2 = y + s;
            if Q::from_integer(y2) <= heights[x + 1] {
                path.push(y2);
                rec(heights, xmax, y_end, s, path, results);
                path.pop();
            }
            s += 1;
        }
    }
    rec(heights, xmax, y_end, 0, &mut path, &mut results);
    results
}

/// The pointwise maximum over all enumerated minorants, if it is itself one
/// of the candidates (i.e. if a unique upmost minorant exists).
pub fn upmost_minorant(heights: &[Q]) -> Option<Vec<i64>> {
    let all = enumerate_integral_minorants(heights);
    if all.is_empty() {
        return None;
    }
    let n = heights.len();
    let mut sup = vec![i64::MIN; n];
    for cand in &all {
        for (i, &v) in cand.iter().enumerate() {
            sup[i] = sup[i].max(v);
        }
    }
    if all.iter().any(|c| *c == sup) {
        Some(sup)
    } else {
        None
    }
}

/// Convert an integer-x height vector to the vertex list of the polygon it
/// traces (dropping collinear interior points).
pub fn heights_to_vertices(heights: &[i64]) -> Vec<(i64, i64)> {
    let n = heights.len();
    let mut verts = vec![(0i64, heights[0])];
    for x in 1..n {
        let x = x as i64;
        let y = heights[x as usize];
        if verts.len() >= 2 {
            let (x0, y0) = verts[verts.len() - 2];
            let (x1, y1) = verts[verts.len() - 1];
            // collinear test: (y1-y0)/(x1-x0) == (y-y1)/(x-x1)
            if (y1 - y0) * (x - x1) == (y - y1) * (x1 - x0) {
                verts.pop();
            }
        }
        verts.push((x, y));
    }
    verts
}

// ---------------------------------------------------------------------------
// Independent generator of admissible symmetric H^1 slope multisets.
// ---------------------------------------------------------------------------

/// All multisets of rational slopes in [0,1] with total multiplicity 2g,
/// symmetric under s -> 1-s, and with integral partial sums at every slope
/// break (Dieudonne-Manin admissibility). Enumerated by filtering multisets
/// built from the Farey fractions of denominator <= 2g; returned sorted, as
/// (slope, multiplicity) lists with slopes ascending.
pub fn admissible_symmetric_h1_brute(g: u64) -> Vec<Vec<(Q, u64)>> {
    let rank = 2 * g;
    // candidate slopes: Farey fractions a/b in [0,1], b <= 2g
    let mut cands: Vec<Q> = Vec::new();
    for b in 1..=rank as i64 {
        for a in 0..=b {
            let r = Ratio::new(a, b);
            if !cands.contains(&r) {
                cands.push(r);
            }
        }
    }
    cands.sort();
    let mut results = Vec::new();
    let mut current: Vec<(Q, u64)> = Vec::new();
    fn rec(
        cands: &[Q],
        from: usize,
        remaining: u64,
        current: &mut Vec<(Q, u64)>,
        results: &mut Vec<Vec<(Q, u64)>>,
    ) {
        if remaining == 0 {
            if is_admissible_symmetric(current) {
                results.push(current.clone());
            }
            return;
        }
        for i in from..cands.len() {
            for m in 1..=remaining {
                current.push((cands[i], m));
                rec(cands, i + 1, remaining - m, current, results);
                current.pop();
            }
        }
    }
    rec(&cands, 0, rank, &mut current, &mut results);
    results
}

fn is_admissible_symmetric(entries: &[(Q, u64)]) -> bool {
    // symmetry: multiplicity of s equals multiplicity of 1-s
    for &(s, m) in entries {
        let mirror = Q::from_integer(1) - s;
        let mm = entries
            .iter()
            .find(|&&(t, _)| t == mirror)
            .map(|&(_, m)| m)
            .unwrap_or(0);
        if mm != m {
            return false;
        }
    }
    // integral partial sums at slope breaks
    let mut acc = Q::zero();
    for &(s, m) in entries {
        acc += s * Q::from_integer(m as i64);
        if !acc.is_integer() {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Tiny standalone finite field F_{p^j} for exhaustive Hom enumeration.
// Elements are coefficient vectors over F_p modulo a hardcoded irreducible.
// ---------------------------------------------------------------------------

#[derive(Clone)]
pub struct TinyField {
    pub p: u64,
    /// monic modulus, little-endian coefficients, degree = len-1
    pub modulus: Vec<u64>,
}

pub type TElt = Vec<u64>; // little-endian, length = degree

impl TinyField {
    /// Hardcoded fields used by the oracles. Supported (p, j):
    /// (2,1) (2,2) (2,4) (3,1) (3,2) (3,3) (5,1) (5,2).
    pub fn new(p: u64, j: u32) -> TinyField {
        let modulus: Vec<u64> = match (p, j) {
            (_, 1) => vec![0, 1],          // x
            (2, 2) => vec![1, 1, 1],       // x^2+x+1
            (2, 4) => vec![1, 1, 0, 0, 1], // x^4+x+1
            (3, 2) => vec![1, 0, 1],       // x^2+1
            (3, 3) => vec![1, 2, 0, 1],    // x^3+2x+1
            (5, 2) => vec![3, 0, 1],       // x^2+3 (=x^2-2, 2 is a non-square mod 5)
            _ => panic!("unsupported tiny field ({p},{j})"),
        };
        TinyField { p, modulus }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> TElt {
        vec![0; self.degree()]
    }

    pub fn one(&self) -> TElt {
        let mut e = self.zero();
        e[0] = 1;
        e
    }

    pub fn from_u64(&self, c: u64) -> TElt {
        let mut e = self.zero();
        e[0] = c % self.p;
        e
    }

    pub fn add(&self, a: &TElt, b: &TElt) -> TElt {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &TElt, b: &TElt) -> TElt {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn mul(&self, a: &TElt, b: &TElt) -> TElt {
        let d = self.degree();
        let mut prod = vec![0u64; 2 * d];
        for (i, &x) in a.iter().enumerate() {
            for (k, &y) in b.iter().enumerate() {
                prod[i + k] = (prod[i + k] + x * y) % self.p;
            }
        }
        // reduce modulo the monic modulus
        for i in (d..2 * d).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for (k, &mc) in self.modulus.iter().enumerate().take(d) {
                    let pos = i - d + k;
                    prod[pos] = (prod[pos] + c * (self.p - mc)) % self.p;
                }
            }
        }
        prod.truncate(d);
        prod
    }

    pub fn pow(&self, a: &TElt, mut e: u64) -> TElt {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// absolute Frobenius x -> x^p
    pub fn frob(&self, a: &TElt) -> TElt {
        self.pow(a, self.p)
    }

    pub fn is_zero(&self, a: &TElt) -> bool {
        a.iter().all(|&c| c == 0)
    }

    /// All p^degree elements, odometer order.
    pub fn all_elements(&self) -> Vec<TElt> {
        let d = self.degree();
        let mut out = Vec::new();
        let mut cur = vec![0u64; d];
        loop {
            out.push(cur.clone());
            let mut i = 0;
            loop {
                if i == d {
                    return out;
                }
                cur[i] += 1;
                if cur[i] < self.p {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive Hom counting for monomial mod-p Dieudonne modules.
// ---------------------------------------------------------------------------

/// A monomial module for the oracle: F and V send basis vector s to
/// coeff * basis vector target (prime-field coefficients suffice for the
/// catalog modules), or to 0.
#[derive(Clone)]
pub struct TestModule {
    pub dim: usize,
    pub f: Vec<Option<(usize, u64)>>,
    pub v: Vec<Option<(usize, u64)>>,
}

impl TestModule {
    /// Dieudonne module of the p-torsion of a supersingular elliptic curve:
    /// F e1 = e2, F e2 = 0, V e1 = e2, V e2 = 0.
    pub fn elliptic_p_torsion() -> TestModule {
        TestModule {
            dim: 2,
            f: vec![Some((1, 1)), None],
            v: vec![Some((1, 1)), None],
        }
    }

    /// M(Z/p): F bijective, V = 0.
    pub fn z_mod_p() -> TestModule {
        TestModule {
            dim: 1,
            f: vec![Some((0, 1))],
            v: vec![None],
        }
    }

    /// M(mu_p): F = 0, V bijective.
    pub fn mu_p() -> TestModule {
        TestModule {
            dim: 1,
            f: vec![None],
            v: vec![Some((0, 1))],
        }
    }

    /// M(alpha_p): F = V = 0.
    pub fn alpha_p() -> TestModule {
        TestModule {
            dim: 1,
            f: vec![None],
            v: vec![None],
        }
    }

    pub fn direct_sum(&self, other: &TestModule) -> TestModule {
        let shift = |m: &Vec<Option<(usize, u64)>>, by: usize| -> Vec<Option<(usize, u64)>> {
            m.iter().map(|e| e.map(|(t, c)| (t + by, c))).collect()
        };
        TestModule {
            dim: self.dim + other.dim,
            f: [self.f.clone(), shift(&other.f, self.dim)].concat(),
            v: [self.v.clone(), shift(&other.v, self.dim)].concat(),
        }
    }
}

/// Count, by exhaustive enumeration over the tiny field, the k-linear maps
/// f: M -> N with f(F_M x) = F_N f(x) and f(V_M x) = V_N f(x), where F is
/// p-power-semilinear and V is inverse-semilinear. Matrices are enumerated
/// entry by entry; the check is performed on every basis vector.
pub fn count_homs_brute(field: &TinyField, m: &TestModule, n: &TestModule) -> u64 {
    let a = m.dim; // source dimension (columns)
    let b = n.dim; // target dimension (rows)
    let elems = field.all_elements();
    let q = elems.len() as u64;
    let total = q.pow((a * b) as u32);
    let mut count = 0u64;

    // frobenius inverse on the tiny field: sigma has order j, so
    // sigma^{-1} = sigma^{j-1}
    let frob_inv = |x: &TElt| -> TElt {
        let mut y = x.clone();
        for _ in 0..field.degree().saturating_sub(1) {
            y = field.frob(&y);
        }
        y
    };

    let mut idx = vec![0usize; a * b];
    for step in 0..total {
        if step > 0 {
            let mut i = 0;
            loop {
                idx[i] += 1;
                if idx[i] < elems.len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
        // matrix entry (row t, col s) = elems[idx[t*a + s]]
        let entry = |t: usize, s: usize| -> &TElt { &elems[idx[t * a + s]] };

        let mut ok = true;
        'check: for s in 0..a {
            // F condition on basis vector s:
            //   f(F_M e_s) = c * column g(s);   F_N f(e_s) = sum_t x_ts^p * F_N u_t
            let mut lhs = vec![field.zero(); b];
            if let Some((g, c)) = m.f[s] {
                let c = field.from_u64(c);
                for (t, l) in lhs.iter_mut().enumerate() {
                    *l = field.mul(&c, entry(t, g));
                }
            }
            let mut rhs = vec![field.zero(); b];
            for t in 0..b {
                if let Some((h, d)) = n.f[t] {
                    let term = field.mul(&field.from_u64(d), &field.frob(entry(t, s)));
                    rhs[h] = field.add(&rhs[h], &term);
                }
            }
            for t in 0..b {
                if lhs[t] != rhs[t] {
                    ok = false;
                    break 'check;
                }
            }
            // V condition, with inverse Frobenius twist
            let mut lhs = vec![field.zero(); b];
            if let Some((g, c)) = m.v[s] {
                let c = field.from_u64(c);
                for (t, l) in lhs.iter_mut().enumerate() {
                    *l = field.mul(&c, entry(t, g));
                }
            }
            let mut rhs = vec![field.zero(); b];
            for t in 0..b {
                if let Some((h, d)) = n.v[t] {
                    let term = field.mul(&field.from_u64(d), &frob_inv(entry(t, s)));
                    rhs[h] = field.add(&rhs[h], &term);
                }
            }
            for t in 0..b {
                if lhs[t] != rhs[t] {
                    ok = false;
                    break 'check;
                }
            }
        }
        if ok {
            count += 1;
        }
    }
    count
}
