//! Brute-force zero finding over small finite fields F_{p^k}, k ≤ 3.
//!
//! Used only as a sampling oracle for hypersurface singularities: if the only
//! common zero of f and its partials over every tested field is the origin,
//! that agrees with an isolated singularity.

use grlab_core::polyparse::parse_polynomial;
use grlab_core::{Coeff, FieldSpec, PolyRing, Polynomial};

/// F_{p^k} as F_p[t]/(μ) with μ monic of degree k and no roots in F_p
/// (irreducible since k ≤ 3). Elements are coefficient vectors of length k.
pub struct ExtField {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
}

pub type Elem = Vec<u64>;

impl ExtField {
    pub fn new(p: u64, k: usize) -> Self {
        assert!((1..=3).contains(&k));
        if k == 1 {
            return ExtField { p, k, modulus: vec![0, 1] };
        }
        // search monic t^k + c_{k-1} t^{k-1} + … + c_0 without roots
        for code in 0..p.pow(k as u32) {
            let mut m: Vec<u64> = (0..k).map(|i| code / p.pow(i as u32) % p).collect();
            m.push(1);
            let has_root = (0..p).any(|x| m.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0);
            if !has_root {
                return ExtField { p, k, modulus: m };
            }
        }
        unreachable!("an irreducible polynomial of degree ≤ 3 exists over every F_p")
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn element(&self, mut idx: u64) -> Elem {
        (0..self.k)
            .map(|_| {
                let d = idx % self.p;
                idx /= self.p;
                d
            })
            .collect()
    }

    pub fn scalar(&self, c: u64) -> Elem {
        let mut e = vec![0; self.k];
        e[0] = c % self.p;
        e
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let p = self.p;
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce with t^k = −(c_0 + … + c_{k−1} t^{k−1})
        for deg in (self.k..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for i in 0..self.k {
                let sub = c * self.modulus[i] % p;
                prod[deg - self.k + i] = (prod[deg - self.k + i] + p - sub) % p;
            }
        }
        prod.truncate(self.k);
        prod
    }

    pub fn pow(&self, a: &Elem, mut e: u32) -> Elem {
        let mut base = a.clone();
        let mut acc = self.scalar(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Reinterprets a polynomial over ℚ in the same variables over F_p by
/// re-parsing its printed form; fractions are inverted mod p.
pub fn reduce_mod_p(ring: &PolyRing, f: &Polynomial, p: u32) -> (PolyRing, Polynomial) {
    let names: Vec<&str> = ring.names().iter().map(|s| s.as_str()).collect();
    let rp = PolyRing::standard(FieldSpec::prime(p as u64).unwrap(), &names);
    let g = parse_polynomial(&ring.display(f), &rp).expect("printed polynomial re-parses");
    (rp, g)
}

fn eval(field: &ExtField, f: &Polynomial, point: &[Elem]) -> Elem {
    let mut acc = field.scalar(0);
    for (c, m) in f.terms() {
        let Coeff::Prime(c) = c else { panic!("expected an F_p coefficient") };
        let mut term = field.scalar(c.value() as u64);
        for (x, &e) in point.iter().zip(m.exponents()) {
            if e > 0 {
                term = field.mul(&term, &field.pow(x, e));
            }
        }
        acc = field.add(&acc, &term);
    }
    acc
}

/// A common zero other than the origin of `polys` (over F_p) in F_{p^k}^n,
/// found by depth-first assignment that tests each polynomial as soon as all
/// of its variables are fixed.
pub fn nonzero_common_zero(field: &ExtField, polys: &[Polynomial], nvars: usize) -> Option<Vec<Elem>> {
    let last_var: Vec<usize> = polys
        .iter()
        .map(|f| {
            f.terms()
                .iter()
                .flat_map(|(_, m)| m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut point = Vec::with_capacity(nvars);
    fn dfs(
        field: &ExtField,
        polys: &[Polynomial],
        last_var: &[usize],
        nvars: usize,
        point: &mut Vec<Elem>,
    ) -> Option<Vec<Elem>> {
        let depth = point.len();
        for (f, &lv) in polys.iter().zip(last_var) {
            if lv == depth && !field.is_zero(&eval(field, f, &padded(point, nvars, field))) {
                return None;
            }
        }
        if depth == nvars {
            return point.iter().any(|x| !field.is_zero(x)).then(|| point.clone());
        }
        for idx in 0..field.size() {
            point.push(field.element(idx));
            if let Some(found) = dfs(field, polys, last_var, nvars, point) {
                return Some(found);
            }
            point.pop();
        }
        None
    }
    // constant polynomials are checked at depth 0
    dfs(field, polys, &last_var, nvars, &mut point)
}

fn padded(point: &[Elem], nvars: usize, field: &ExtField) -> Vec<Elem> {
    let mut v = point.to_vec();
    v.resize(nvars, field.scalar(0));
    v
}

/// Whether, over every F_{p^k} with p ∈ `primes` and k ≤ `max_k`, the only
/// common zero of f and its partials is the origin.
pub fn hypersurface_isolated_by_points(ring: &PolyRing, f: &Polynomial, primes: &[u32], max_k: usize) -> bool {
    for &p in primes {
        let (rp, fp) = reduce_mod_p(ring, f, p);
        let mut system = vec![fp.clone()];
        system.extend((0..rp.nvars()).map(|j| rp.derivative(&fp, j)).filter(|g| !g.is_zero()));
        for k in 1..=max_k {
            let field = ExtField::new(p as u64, k);
            if nonzero_common_zero(&field, &system, rp.nvars()).is_some() {
                return false;
            }
        }
    }
    true
}
