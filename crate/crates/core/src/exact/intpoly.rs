//! Integer-coefficient kernels behind `Poly::gcd`.
//!
//! A gcd is computed on primitive integer images: the common power of `z`
//! is split off, a modular degree test settles the coprime case, and only
//! otherwise does a primitive remainder sequence run over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Primes below `2^62` used for the modular degree test.
const PRIMES: [u64; 3] = [4_611_686_018_427_387_847, 4_611_686_018_427_387_817, 4_611_686_018_427_387_787];

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Divides out the content and makes the leading coefficient positive.
pub(super) fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let Some(lead) = v.last() else { return v };
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if lead.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

fn reduce_mod(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    v.iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue below p"))
        .collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Degree of `gcd(a mod p, b mod p)`; at least the degree of the gcd over
/// `Q` when `p` divides neither leading coefficient.
fn gcd_degree_mod(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut a: Vec<u64> = a.to_vec();
    let mut b: Vec<u64> = b.to_vec();
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        if a.len() >= b.len() {
            let inv = pow_mod(*b.last().unwrap(), p - 2, p);
            while a.len() >= b.len() {
                let shift = a.len() - b.len();
                let c = mul_mod(*a.last().unwrap(), inv, p);
                for (j, &d) in b.iter().enumerate() {
                    let t = mul_mod(c, d, p);
                    a[shift + j] = (a[shift + j] + p - t) % p;
                }
                trim(&mut a);
                if a.is_empty() {
                    break;
                }
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Pseudo-remainder of `a` by `b` over `Z`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    while rem.len() > db {
        let c = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        for r in rem.iter_mut() {
            *r *= lead;
        }
        for (j, d) in b.iter().enumerate() {
            rem[shift + j] -= &c * d;
        }
        trim(&mut rem);
    }
    rem
}

/// Primitive gcd of two nonzero primitive integer polynomials.
pub(super) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let ord = |v: &[BigInt]| v.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let k = ord(a).min(ord(b));
    let mut a = a[ord(a)..].to_vec();
    let mut b = b[ord(b)..].to_vec();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut out = vec![BigInt::zero(); k];
    if b.len() == 1 {
        out.push(BigInt::one());
        return out;
    }
    let coprime = PRIMES.iter().any(|&p| {
        let pb = BigInt::from(p);
        let usable = !a.last().unwrap().is_multiple_of(&pb) && !b.last().unwrap().is_multiple_of(&pb);
        usable && gcd_degree_mod(&reduce_mod(&a, p), &reduce_mod(&b, p), p) == 0
    });
    let g = if coprime {
        vec![BigInt::one()]
    } else {
        while !b.is_empty() {
            let r = make_primitive(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        make_primitive(a)
    };
    out.extend(g);
    out
}

pub(super) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a / b` for primitive `a` and `b`. By Gauss's lemma the quotient of an
/// exact division over `Q` is integral, so any non-integral step means `b`
/// does not divide `a`.
pub(super) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len().checked_sub(1)?;
    if a.len() <= db {
        return a.is_empty().then(Vec::new);
    }
    let lead = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + db];
        if !top.is_zero() {
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in b.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
    }
    rem[..db].iter().all(Zero::is_zero).then_some(quot)
}
