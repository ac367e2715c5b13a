//! Arithmetic in finite fields `F_{p^m}` and F_p-linear algebra.
//!
//! Elements are coefficient vectors over F_p modulo a monic irreducible
//! polynomial chosen deterministically (smallest in base-p coefficient
//! order). Everything is exact; no randomness is involved, so equal inputs
//! always produce the same modulus and the same element encodings.

use crate::error::{Error, Result};

/// An element of `F_{p^m}`, stored as `m` coefficients over F_p
/// (little-endian in the power basis of the chosen modulus).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqElt {
    pub(crate) coeffs: Vec<u64>,
}

/// The field `F_{p^m}` with a fixed monic irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    m: u32,
    /// Monic modulus of degree `m`, little-endian, length `m + 1`.
    modulus: Vec<u64>,
}

const ENUMERATION_LIMIT: u64 = 1 << 20;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FiniteField {
    /// `F_{p^m}` with the deterministic modulus: the first monic irreducible
    /// polynomial of degree `m` in ascending base-p order of its lower
    /// coefficients.
    pub fn new(p: u64, m: u32) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::Resource(format!("characteristic {p} exceeds 2^31")));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("extension degree must be positive".into()));
        }
        if m == 1 {
            // modulus x (never actually reduced against: elements have length 1)
            return Ok(FiniteField { p, m, modulus: vec![0, 1] });
        }
        // search lower coefficients c_0..c_{m-1} in ascending base-p value
        let mut lower = vec![0u64; m as usize];
        loop {
            // candidate must have a nonzero constant term to be irreducible
            if lower[0] != 0 {
                let mut modulus = lower.clone();
                modulus.push(1);
                let cand = FiniteField { p, m, modulus };
                if cand.modulus_is_irreducible()? {
                    return Ok(cand);
                }
            }
            // increment in base p, least-significant first
            let mut k = 0;
            loop {
                if k == m as usize {
                    return Err(Error::Internal(format!(
                        "no irreducible polynomial of degree {m} over F_{p} found"
                    )));
                }
                lower[k] += 1;
                if lower[k] < p {
                    break;
                }
                lower[k] = 0;
                k += 1;
            }
        }
    }

    /// `F_{p^m}` with a caller-supplied monic modulus (little-endian,
    /// length `m + 1`), verified irreducible.
    pub fn with_modulus(p: u64, m: u32, modulus: &[u64]) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("extension degree must be positive".into()));
        }
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidArgument(format!(
                "modulus must have length {} for degree {m}",
                m + 1
            )));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidArgument("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument("modulus coefficients must lie in [0, p)".into()));
        }
        let field = FiniteField { p, m, modulus: modulus.to_vec() };
        if m > 1 && !field.modulus_is_irreducible()? {
            return Err(Error::InvalidArgument("modulus is reducible".into()));
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements `p^m`, or a resource error if it exceeds `u64`.
    pub fn order(&self) -> Result<u64> {
        let mut acc: u64 = 1;
        for _ in 0..self.m {
            acc = acc
                .checked_mul(self.p)
                .ok_or_else(|| Error::Resource("field order exceeds u64".into()))?;
        }
        Ok(acc)
    }

    pub fn zero(&self) -> FqElt {
        FqElt { coeffs: vec![0; self.m as usize] }
    }

    pub fn one(&self) -> FqElt {
        let mut coeffs = vec![0; self.m as usize];
        coeffs[0] = 1;
        FqElt { coeffs }
    }

    /// Embed an integer (mod p) as a constant.
    pub fn from_u64(&self, n: u64) -> FqElt {
        let mut coeffs = vec![0; self.m as usize];
        coeffs[0] = n % self.p;
        FqElt { coeffs }
    }

    /// Element from explicit power-basis coefficients (low to high); short
    /// vectors are zero-padded.
    pub fn elt_from_coeffs(&self, coeffs: &[u64]) -> Result<FqElt> {
        if coeffs.len() > self.m as usize {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients exceed the field degree {}",
                coeffs.len(),
                self.m
            )));
        }
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % self.p).collect();
        c.resize(self.m as usize, 0);
        Ok(FqElt { coeffs: c })
    }

    pub fn is_zero(&self, a: &FqElt) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElt, b: &FqElt) -> FqElt {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FqElt { coeffs }
    }

    pub fn neg(&self, a: &FqElt) -> FqElt {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FqElt { coeffs }
    }

    pub fn sub(&self, a: &FqElt, b: &FqElt) -> FqElt {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FqElt, b: &FqElt) -> FqElt {
        let m = self.m as usize;
        // schoolbook product, then reduce by the monic modulus
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            // x^d = x^(d-m) * (x^m) = x^(d-m) * (-lower part of modulus)
            for k in 0..m {
                let sub = (c * self.modulus[k]) % self.p;
                prod[d - m + k] = (prod[d - m + k] + self.p - sub) % self.p;
            }
        }
        prod.truncate(m);
        FqElt { coeffs: prod }
    }

    pub fn pow(&self, a: &FqElt, mut e: u128) -> FqElt {
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

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// polynomials over F_p.
    pub fn inv(&self, a: &FqElt) -> Result<FqElt> {
        if self.is_zero(a) {
            return Err(Error::InvalidArgument("zero has no multiplicative inverse".into()));
        }
        if self.m == 1 {
            return Ok(FqElt { coeffs: vec![mod_inv(a.coeffs[0], self.p)?] });
        }
        // invariant: s_i * a == r_i (mod modulus); run Euclid until r1 = 0,
        // leaving r0 = gcd(a, modulus), a nonzero constant by irreducibility
        let mut r0: Vec<u64> = self.modulus.clone();
        let mut r1: Vec<u64> = a.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<u64> = vec![0];
        let mut s1: Vec<u64> = vec![1];
        while !r1.iter().all(|&c| c == 0) {
            let (q, rem) = poly_divmod(&r0, &r1, self.p)?;
            let new_s = poly_sub(&s0, &poly_mul(&q, &s1, self.p), self.p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, new_s);
        }
        trim(&mut r0);
        if poly_degree(&r0) != 0 || r0[0] == 0 {
            return Err(Error::Internal("gcd with an irreducible modulus is not a unit".into()));
        }
        let cinv = mod_inv(r0[0], self.p)?;
        let reduced = poly_divmod(&s0, &self.modulus, self.p)?.1;
        let mut out: Vec<u64> = reduced.iter().map(|&x| (x * cinv) % self.p).collect();
        out.resize(self.m as usize, 0);
        let candidate = FqElt { coeffs: out };
        let check = self.mul(a, &candidate);
        if check != self.one() {
            return Err(Error::Internal("inverse verification failed".into()));
        }
        Ok(candidate)
    }

    /// The arithmetic Frobenius `x -> x^p`.
    pub fn frobenius(&self, a: &FqElt) -> FqElt {
        self.pow(a, self.p as u128)
    }

    /// Inverse of Frobenius: `m - 1` further Frobenius applications
    /// (Frobenius has order `m` on `F_{p^m}`).
    pub fn frobenius_inv(&self, a: &FqElt) -> FqElt {
        let mut out = a.clone();
        for _ in 0..self.m.saturating_sub(1) {
            out = self.frobenius(&out);
        }
        out
    }

    /// All field elements, in lexicographic coefficient order. Guarded by a
    /// resource limit on the field size.
    pub fn enumerate(&self) -> Result<Vec<FqElt>> {
        let order = self.order()?;
        if order > ENUMERATION_LIMIT {
            return Err(Error::Resource(format!(
                "enumerating {order} field elements exceeds the limit {ENUMERATION_LIMIT}"
            )));
        }
        let m = self.m as usize;
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = vec![0u64; m];
        loop {
            out.push(FqElt { coeffs: cur.clone() });
            let mut k = 0;
            loop {
                if k == m {
                    return Ok(out);
                }
                cur[k] += 1;
                if cur[k] < self.p {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    /// The matrix of multiplication by `a` in the power basis, as an
    /// `m x m` matrix over F_p (column `j` is `a * x^j`).
    pub fn mul_matrix(&self, a: &FqElt) -> FpMat {
        let m = self.m as usize;
        let mut data = vec![0u64; m * m];
        let mut basis = self.one();
        let x = self.gen_x();
        for j in 0..m {
            let col = self.mul(a, &basis);
            for i in 0..m {
                data[i * m + j] = col.coeffs[i];
            }
            basis = self.mul(&basis, &x);
        }
        FpMat { p: self.p, rows: m, cols: m, data }
    }

    /// The matrix of the Frobenius `x -> x^p` in the power basis.
    pub fn frob_matrix(&self) -> FpMat {
        let m = self.m as usize;
        let mut data = vec![0u64; m * m];
        let mut basis = self.one();
        let x = self.gen_x();
        for j in 0..m {
            let col = self.frobenius(&basis);
            for i in 0..m {
                data[i * m + j] = col.coeffs[i];
            }
            basis = self.mul(&basis, &x);
        }
        FpMat { p: self.p, rows: m, cols: m, data }
    }

    fn gen_x(&self) -> FqElt {
        let mut coeffs = vec![0; self.m as usize];
        if self.m == 1 {
            coeffs[0] = 0;
        } else {
            coeffs[1] = 1;
        }
        FqElt { coeffs }
    }

    /// Find the image of the power-basis generator of `base` inside this
    /// field, so that mapping polynomials in the generator embeds
    /// `F_{p^d}` into `F_{p^m}` (requires `d | m`). Deterministic: the
    /// lexicographically first root of the base modulus is chosen.
    pub fn embed_subfield(&self, base: &FiniteField) -> Result<FqElt> {
        if base.p != self.p {
            return Err(Error::InvalidArgument(format!(
                "cannot embed characteristic {} into characteristic {}",
                base.p, self.p
            )));
        }
        if self.m % base.m != 0 {
            return Err(Error::InvalidArgument(format!(
                "F_{{{}^{}}} is not a subfield of F_{{{}^{}}}",
                base.p, base.m, self.p, self.m
            )));
        }
        if base.m == 1 {
            return Ok(self.one());
        }
        // roots of the base modulus lie in the kernel of Frob^d - id
        // intersected with... simplest exact route: solve directly by
        // scanning the kernel of the F_p-linear map Frob^d - id (the
        // subfield F_{p^d}, at most p^d elements) for a root.
        let m = self.m as usize;
        let frob = self.frob_matrix();
        let mut frob_d = FpMat::identity(self.p, m);
        for _ in 0..base.m {
            frob_d = frob_d.mul(&frob)?;
        }
        let diff = frob_d.sub(&FpMat::identity(self.p, m))?;
        let kernel = diff.kernel()?;
        // enumerate F_p-combinations of the kernel basis (p^d of them)
        let d = kernel.len();
        let count = {
            let mut acc: u64 = 1;
            for _ in 0..d {
                acc = acc.checked_mul(self.p).ok_or_else(|| {
                    Error::Resource("subfield too large to scan for an embedding".into())
                })?;
                if acc > ENUMERATION_LIMIT {
                    return Err(Error::Resource(
                        "subfield too large to scan for an embedding".into(),
                    ));
                }
            }
            acc
        };
        let mut digits = vec![0u64; d];
        let mut candidates: Vec<FqElt> = Vec::with_capacity(count as usize);
        loop {
            let mut coeffs = vec![0u64; m];
            for (t, &dig) in digits.iter().enumerate() {
                if dig == 0 {
                    continue;
                }
                for i in 0..m {
                    coeffs[i] = (coeffs[i] + dig * kernel[t][i]) % self.p;
                }
            }
            candidates.push(FqElt { coeffs });
            let mut k = 0;
            loop {
                if k == d {
                    candidates.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
                    for cand in &candidates {
                        if self.is_zero(&self.eval_poly(&base.modulus, cand)) {
                            return Ok(cand.clone());
                        }
                    }
                    return Err(Error::Internal(
                        "no root of the base modulus found in the subfield".into(),
                    ));
                }
                digits[k] += 1;
                if digits[k] < self.p {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }

    /// Map an element of `base` through the embedding determined by
    /// `gen_image = embed_subfield(base)`.
    pub fn embed_elt(&self, base: &FiniteField, gen_image: &FqElt, a: &FqElt) -> FqElt {
        debug_assert_eq!(a.coeffs.len(), base.m as usize, "element not from the base field");
        // evaluate a's coefficient polynomial at gen_image
        self.eval_poly(&a.coeffs, gen_image)
    }

    fn eval_poly(&self, poly: &[u64], at: &FqElt) -> FqElt {
        let mut acc = self.zero();
        for &c in poly.iter().rev() {
            acc = self.mul(&acc, at);
            acc = self.add(&acc, &self.from_u64(c));
        }
        acc
    }

    /// Rabin irreducibility test for the stored modulus of degree `m > 1`:
    /// `x^(p^m) == x (mod f)` and for every prime `q | m`,
    /// `gcd(x^(p^(m/q)) - x, f) == 1`.
    fn modulus_is_irreducible(&self) -> Result<bool> {
        let m = self.m;
        // helper: compute x^(p^k) mod f by repeated Frobenius of x
        let xq = |k: u32| -> FqElt {
            let mut cur = self.gen_x();
            for _ in 0..k {
                cur = self.pow(&cur, self.p as u128);
            }
            cur
        };
        let x = self.gen_x();
        if xq(m) != x {
            return Ok(false);
        }
        for q in prime_divisors(m as u64) {
            let sub = self.sub(&xq(m / q as u32), &x);
            // gcd(sub, f) over F_p[x]
            let mut a = self.modulus.clone();
            let mut b = sub.coeffs.clone();
            trim(&mut b);
            while !b.iter().all(|&c| c == 0) {
                let (_, rem) = poly_divmod(&a, &b, self.p)?;
                a = std::mem::replace(&mut b, rem);
            }
            trim(&mut a);
            if poly_degree(&a) != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mod_inv(a: u64, p: u64) -> Result<u64> {
    let a = a % p;
    if a == 0 {
        return Err(Error::InvalidArgument("zero has no inverse mod p".into()));
    }
    // extended Euclid over signed integers
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        r0 -= q * r1;
        std::mem::swap(&mut r0, &mut r1);
        t0 -= q * t1;
        std::mem::swap(&mut t0, &mut t1);
    }
    if r0 != 1 {
        return Err(Error::Internal(format!("{a} is not invertible mod {p}")));
    }
    Ok(((t0 % p as i64 + p as i64) % p as i64) as u64)
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn poly_degree(v: &[u64]) -> usize {
    let mut d = v.len();
    while d > 1 && v[d - 1] == 0 {
        d -= 1;
    }
    d - 1
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y % p) % p;
    }
    out
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![0];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Division with remainder in F_p[x]; the divisor must be nonzero.
fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut rem: Vec<u64> = a.to_vec();
    trim(&mut rem);
    let mut bb: Vec<u64> = b.to_vec();
    trim(&mut bb);
    if bb.iter().all(|&c| c == 0) {
        return Err(Error::InvalidArgument("polynomial division by zero".into()));
    }
    let db = poly_degree(&bb);
    let lead_inv = mod_inv(bb[db], p)?;
    let mut quot = vec![0u64; rem.len().saturating_sub(db).max(1)];
    while !rem.iter().all(|&c| c == 0) && poly_degree(&rem) >= db {
        let dr = poly_degree(&rem);
        let coef = (rem[dr] * lead_inv) % p;
        let shift = dr - db;
        quot[shift] = coef;
        for i in 0..=db {
            let sub = (coef * bb[i]) % p;
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        trim(&mut rem);
        if dr == 0 {
            break;
        }
    }
    trim(&mut rem);
    trim(&mut quot);
    Ok((quot, rem))
}

/// A dense matrix over F_p with exact Gaussian elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMat {
    pub(crate) p: u64,
    pub(crate) rows: usize,
    pub(crate) cols: usize,
    pub(crate) data: Vec<u64>,
}

impl FpMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> FpMat {
        FpMat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> FpMat {
        let mut m = FpMat::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<FpMat> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            for &x in row {
                data.push(x % p);
            }
        }
        Ok(FpMat { p, rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn mul(&self, other: &FpMat) -> Result<FpMat> {
        if self.p != other.p {
            return Err(Error::InvalidArgument("matrix characteristic mismatch".into()));
        }
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FpMat::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % self.p;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FpMat) -> Result<FpMat> {
        if self.p != other.p || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::InvalidArgument("matrix shape or characteristic mismatch".into()));
        }
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = (self.data[i] + self.p - other.data[i]) % self.p;
        }
        Ok(out)
    }

    /// Place `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FpMat) -> Result<()> {
        if r0 + block.rows > self.rows || c0 + block.cols > self.cols {
            return Err(Error::InvalidArgument("block placement out of range".into()));
        }
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
        Ok(())
    }

    /// Row-echelon rank by Gaussian elimination (exact, mod p).
    pub fn rank(&self) -> Result<usize> {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(pr) = pivot else { continue };
            // swap rows
            for j in 0..m.cols {
                let a = m.get(rank, j);
                let b = m.get(pr, j);
                m.set(rank, j, b);
                m.set(pr, j, a);
            }
            let inv = mod_inv(m.get(rank, col), m.p)?;
            for j in 0..m.cols {
                let v = (m.get(rank, j) * inv) % m.p;
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                if r != rank && m.get(r, col) != 0 {
                    let f = m.get(r, col);
                    for j in 0..m.cols {
                        let v = (m.get(r, j) + (m.p - f) * m.get(rank, j)) % m.p;
                        m.set(r, j, v);
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        Ok(rank)
    }

    /// A basis of the right kernel, each vector of length `cols`.
    pub fn kernel(&self) -> Result<Vec<Vec<u64>>> {
        let mut m = self.clone();
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(pr) = pivot else { continue };
            for j in 0..m.cols {
                let a = m.get(rank, j);
                let b = m.get(pr, j);
                m.set(rank, j, b);
                m.set(pr, j, a);
            }
            let inv = mod_inv(m.get(rank, col), m.p)?;
            for j in 0..m.cols {
                let v = (m.get(rank, j) * inv) % m.p;
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                if r != rank && m.get(r, col) != 0 {
                    let f = m.get(r, col);
                    for j in 0..m.cols {
                        let v = (m.get(r, j) + (m.p - f) * m.get(rank, j)) % m.p;
                        m.set(r, j, v);
                    }
                }
            }
            pivot_col_of_row.push(col);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        let pivot_set: std::collections::BTreeSet<usize> =
            pivot_col_of_row.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; m.cols];
            v[free] = 1;
            for (row, &pc) in pivot_col_of_row.iter().enumerate() {
                // pivot row: x_pc + sum over free columns = 0
                let coef = m.get(row, free);
                v[pc] = (m.p - coef) % m.p;
            }
            basis.push(v);
        }
        Ok(basis)
    }
}
