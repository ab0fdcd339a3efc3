//! Builders for the named group families: symmetric/alternating/cyclic/
//! dihedral groups, GL/SL, Singer cycles and semilinear groups, wreath
//! products (permutation and imprimitive-linear), the extremal wreath
//! towers, and the search-derived exceptional subgroups of small GL_n(q).
//!
//! Also home to `GroupExpr`, the small expression language the CLI uses to
//! name constructions.

use std::sync::Arc;

use crate::arith;
use crate::exact::ExactBound;
use crate::gf::{self, FieldSpec};
use crate::group::{closure, mat_identity, Elt, EltKind, FiniteGroup};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Permutation families
// ---------------------------------------------------------------------------

fn perm_identity(n: u32) -> Elt {
    Elt::Perm((0..n.max(1)).collect())
}

/// Sym_n in its natural action.
pub fn sym(n: u32, cap: u64) -> Result<FiniteGroup> {
    if n < 2 {
        return closure(vec![], cap);
    }
    let transposition = {
        let mut v: Vec<u32> = (0..n).collect();
        v.swap(0, 1);
        Elt::Perm(v)
    };
    let cycle = Elt::Perm((0..n).map(|i| (i + 1) % n).collect());
    closure(vec![transposition, cycle], cap)
}

/// Alt_n in its natural action.
pub fn alt(n: u32, cap: u64) -> Result<FiniteGroup> {
    if n < 3 {
        return closure(vec![], cap);
    }
    let three_cycle = {
        let mut v: Vec<u32> = (0..n).collect();
        v[0] = 1;
        v[1] = 2;
        v[2] = 0;
        Elt::Perm(v)
    };
    if n == 3 {
        return closure(vec![three_cycle], cap);
    }
    // (1 2 ... n) for n odd, (2 3 ... n) for n even — both even permutations
    let long = if n % 2 == 1 {
        Elt::Perm((0..n).map(|i| (i + 1) % n).collect())
    } else {
        Elt::Perm((0..n).map(|i| if i == 0 { 0 } else { i % (n - 1) + 1 }).collect())
    };
    closure(vec![three_cycle, long], cap)
}

/// Cyclic group of order n as an n-cycle.
pub fn cyclic(n: u32, cap: u64) -> Result<FiniteGroup> {
    if n < 2 {
        return closure(vec![], cap);
    }
    closure(vec![Elt::Perm((0..n).map(|i| (i + 1) % n).collect())], cap)
}

/// Dihedral group of order 2n acting on the n-gon.
pub fn dihedral(n: u32, cap: u64) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::HypothesisViolated("dihedral needs n >= 3".into()));
    }
    let rotation = Elt::Perm((0..n).map(|i| (i + 1) % n).collect());
    let reflection = Elt::Perm((0..n).map(|i| (n - i) % n).collect());
    closure(vec![rotation, reflection], cap)
}

/// R ≀ T in the imprimitive action on r·t points: R acts in each of the t
/// blocks, T permutes the blocks.
pub fn wreath_perm(r: &FiniteGroup, t: &FiniteGroup, cap: u64) -> Result<FiniteGroup> {
    let (EltKind::Perm { degree: rd }, EltKind::Perm { degree: td }) = (&r.kind, &t.kind) else {
        return Err(Error::KindMismatch("wreath_perm needs two permutation groups".into()));
    };
    let (rd, td) = (*rd, *td);
    let degree = rd * td;
    let mut gens = Vec::new();
    for g in &r.generators {
        let Elt::Perm(img) = g else { unreachable!() };
        for block in 0..td {
            let mut v: Vec<u32> = (0..degree).collect();
            for i in 0..rd {
                v[(block * rd + i) as usize] = block * rd + img[i as usize];
            }
            gens.push(Elt::Perm(v));
        }
    }
    for g in &t.generators {
        let Elt::Perm(img) = g else { unreachable!() };
        let mut v: Vec<u32> = vec![0; degree as usize];
        for block in 0..td {
            for i in 0..rd {
                v[(block * rd + i) as usize] = img[block as usize] * rd + i;
            }
        }
        gens.push(Elt::Perm(v));
    }
    if gens.is_empty() {
        gens.push(perm_identity(degree.max(1)));
    }
    closure(gens, cap)
}

/// The k-level extremal wreath tower for the prime p:
///   p = 2 → C₃ ≀ ⋯ ≀ C₃ on 3^k points (a Sylow 3-subgroup of Sym_{3^k});
///   p = 3 → (C₅⋊C₄) ≀ ⋯ on 5^k points;
///   p ≥ 5 → Sym_{p−1} ≀ ⋯ on (p−1)^k points.
/// The result is a p′-group of order exactly h_p(degree).
pub fn extremal_perm(p: u64, k: u32, cap: u64) -> Result<FiniteGroup> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::HypothesisViolated("need k >= 1".into()));
    }
    let g = extremal_tower(p, k, cap)?;
    let degree = match &g.kind {
        EltKind::Perm { degree } => *degree as u64,
        _ => unreachable!(),
    };
    assert!(g.order() % p != 0, "extremal tower must be a p'-group");
    let h = crate::bounds::h_p_int(p, degree);
    assert_eq!(
        ExactBound::from_integer(g.order()).cmp_exact(&h),
        std::cmp::Ordering::Equal,
        "tower order must equal h_p(degree)"
    );
    Ok(g)
}

/// The tower with k levels; k = 0 gives the trivial group on one point.
pub(crate) fn extremal_tower(p: u64, k: u32, cap: u64) -> Result<FiniteGroup> {
    if k == 0 {
        return closure(vec![], cap);
    }
    let base = match p {
        2 => cyclic(3, cap)?,
        3 => {
            // C₅⋊C₄ on 5 points: the 5-cycle and i ↦ 2i mod 5
            let five = Elt::Perm((0..5u32).map(|i| (i + 1) % 5).collect());
            let double = Elt::Perm((0..5u32).map(|i| (2 * i) % 5).collect());
            closure(vec![five, double], cap)?
        }
        _ => sym((p - 1) as u32, cap)?,
    };
    let mut g = base.clone();
    for _ in 1..k {
        g = wreath_perm(&g, &base, cap)?;
    }
    Ok(g)
}

/// A × B acting on the disjoint union of their domains (permutation groups)
/// or block-diagonally (matrix groups over the same field).
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, cap: u64) -> Result<FiniteGroup> {
    match (&a.kind, &b.kind) {
        (EltKind::Perm { degree: da }, EltKind::Perm { degree: db }) => {
            let (da, db) = (*da, *db);
            let mut gens = Vec::new();
            for g in &a.generators {
                let Elt::Perm(img) = g else { unreachable!() };
                let mut v: Vec<u32> = (0..da + db).collect();
                v[..da as usize].copy_from_slice(img);
                gens.push(Elt::Perm(v));
            }
            for g in &b.generators {
                let Elt::Perm(img) = g else { unreachable!() };
                let mut v: Vec<u32> = (0..da + db).collect();
                for i in 0..db {
                    v[(da + i) as usize] = da + img[i as usize];
                }
                gens.push(Elt::Perm(v));
            }
            if gens.is_empty() {
                gens.push(perm_identity((da + db).max(1)));
            }
            closure(gens, cap)
        }
        (EltKind::Mat { field: fa, n: na }, EltKind::Mat { field: fb, n: nb }) => {
            if fa != fb {
                return Err(Error::KindMismatch("direct product needs matching fields".into()));
            }
            let (na, nb) = (*na as usize, *nb as usize);
            let n = na + nb;
            let embed = |m: &[u64], offset: usize, size: usize| {
                let mut data = mat_identity(n);
                for i in 0..size {
                    for j in 0..size {
                        data[(offset + i) * n + (offset + j)] = m[i * size + j];
                    }
                }
                Elt::Mat { field: fa.clone(), n: n as u32, data }
            };
            let mut gens = Vec::new();
            for g in &a.generators {
                let Elt::Mat { data, .. } = g else { unreachable!() };
                gens.push(embed(data, 0, na));
            }
            for g in &b.generators {
                let Elt::Mat { data, .. } = g else { unreachable!() };
                gens.push(embed(data, na, nb));
            }
            closure(gens, cap)
        }
        _ => Err(Error::KindMismatch("direct product needs groups of the same kind".into())),
    }
}

// ---------------------------------------------------------------------------
// Matrix families
// ---------------------------------------------------------------------------

fn field_for(q: u64) -> Result<Arc<FieldSpec>> {
    let (p, f) = arith::prime_power(q)?;
    FieldSpec::make(p, f)
}

fn expected_gl_order(n: u32, q: u64) -> u128 {
    let qn = (q as u128).pow(n);
    let mut order: u128 = 1;
    let mut qi: u128 = 1;
    for _ in 0..n {
        order *= qn - qi;
        qi *= q as u128;
    }
    order
}

/// GL_n(q), generated by elementary transvections and diag(ω, 1, …, 1).
pub fn gl(n: u32, q: u64, cap: u64) -> Result<FiniteGroup> {
    let field = field_for(q)?;
    let expected = expected_gl_order(n, q);
    if expected > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let mut gens = transvections(&field, n);
    if q > 2 && n >= 1 {
        let mut data = mat_identity(n as usize);
        data[0] = field.primitive_element();
        gens.push(Elt::Mat { field: field.clone(), n, data });
    }
    if gens.is_empty() {
        gens.push(Elt::Mat { field, n, data: mat_identity(n as usize) });
    }
    let g = closure(gens, cap)?;
    assert_eq!(g.order() as u128, expected, "GL order check");
    Ok(g)
}

/// SL_n(q), generated by elementary transvections.
pub fn sl(n: u32, q: u64, cap: u64) -> Result<FiniteGroup> {
    let field = field_for(q)?;
    let expected = expected_gl_order(n, q) / (q as u128 - 1);
    if expected > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let mut gens = transvections(&field, n);
    if gens.is_empty() {
        gens.push(Elt::Mat { field, n, data: mat_identity(n as usize) });
    }
    let g = closure(gens, cap)?;
    assert_eq!(g.order() as u128, expected, "SL order check");
    Ok(g)
}

/// Elementary transvections I + c·e_{ij} (i ≠ j), one per basis power
/// c = ωᵏ so the full root subgroups are generated; empty for n = 1.
fn transvections(field: &Arc<FieldSpec>, n: u32) -> Vec<Elt> {
    let mut gens = Vec::new();
    let n = n as usize;
    let mut coeffs = vec![field.one()];
    let omega = field.primitive_element();
    let mut w = field.one();
    for _ in 1..field.f {
        w = field.mul(w, omega);
        coeffs.push(w);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for &c in &coeffs {
                    let mut data = mat_identity(n);
                    data[i * n + j] = c;
                    gens.push(Elt::Mat { field: field.clone(), n: n as u32, data });
                }
            }
        }
    }
    gens
}

/// A Singer element of GL_n(q): the companion matrix (acting on row vectors)
/// of the lexicographically least primitive degree-n modulus over GF(q);
/// its order is qⁿ − 1.
pub fn singer(n: u32, q: u64) -> Result<Elt> {
    let field = field_for(q)?;
    let modulus = gf::find_primitive_modulus(&field, n)
        .ok_or_else(|| Error::NoSolution(format!("no primitive modulus of degree {n} over GF({q})")))?;
    let nn = n as usize;
    let mut data = vec![0u64; nn * nn];
    for i in 0..nn - 1 {
        data[i * nn + i + 1] = field.one();
    }
    for j in 0..nn {
        data[(nn - 1) * nn + j] = field.neg(modulus[j]);
    }
    let m = Elt::Mat { field, n, data };
    let expect = q
        .checked_pow(n)
        .map(|v| v - 1)
        .ok_or_else(|| Error::TooLarge(format!("q^n overflows at q={q}, n={n}")))?;
    assert_eq!(m.order(), expect, "Singer element order check");
    Ok(m)
}

/// The matrix of the q-power Frobenius of GF(qⁿ)/GF(q) in the power basis of
/// the same modulus the Singer element uses.
fn frobenius_matrix(n: u32, q: u64) -> Result<Elt> {
    let field = field_for(q)?;
    let modulus = gf::find_primitive_modulus(&field, n)
        .ok_or_else(|| Error::NoSolution(format!("no primitive modulus of degree {n} over GF({q})")))?;
    let nn = n as usize;
    let mut data = vec![0u64; nn * nn];
    for i in 0..nn {
        let row = gf::poly_pow_x(&field, i as u64 * q, &modulus);
        data[i * nn..(i + 1) * nn].copy_from_slice(&row);
    }
    Ok(Elt::Mat { field, n, data })
}

/// ΓL₁(qⁿ) ≅ (qⁿ−1)⋊n inside GL_n(q): ⟨Singer, Frobenius⟩, order n(qⁿ−1).
pub fn gamma_l1(n: u32, q: u64, cap: u64) -> Result<FiniteGroup> {
    let s = singer(n, q)?;
    let f = frobenius_matrix(n, q)?;
    let g = closure(vec![s, f], cap)?;
    let expect = n as u64 * (q.pow(n) - 1);
    assert_eq!(g.order(), expect, "ΓL₁ order check");
    Ok(g)
}

/// The Hall p′-subgroup ⟨Singer, Frobenius^{n_p}⟩ of ΓL₁(qⁿ), where p is the
/// characteristic of GF(q); order n_{p′}(qⁿ − 1).
pub fn hall_pprime_gamma_l1(n: u32, q: u64, cap: u64) -> Result<FiniteGroup> {
    let (p, _) = arith::prime_power(q)?;
    let s = singer(n, q)?;
    let f = frobenius_matrix(n, q)?.pow(arith::p_part(n as u64, p));
    let g = closure(vec![s, f], cap)?;
    let expect = arith::p_prime_part(n as u64, p) * (q.pow(n) - 1);
    assert_eq!(g.order(), expect, "Hall p′-subgroup order check");
    assert!(g.order() % p != 0, "Hall subgroup must be a p'-group");
    Ok(g)
}

/// R ≀ T ≤ GL_{mt}(q) for R ≤ GL_m(q) and T ≤ Sym_t: block-diagonal copies
/// of R plus block-permutation matrices.
pub fn wreath_mat(r: &FiniteGroup, t: &FiniteGroup, cap: u64) -> Result<FiniteGroup> {
    let (EltKind::Mat { field, n: m }, EltKind::Perm { degree: td }) = (&r.kind, &t.kind) else {
        return Err(Error::KindMismatch(
            "wreath_mat needs a matrix group and a permutation group".into(),
        ));
    };
    let (m, td) = (*m as usize, *td as usize);
    let n = m * td;
    let mut gens = Vec::new();
    for g in &r.generators {
        let Elt::Mat { data, .. } = g else { unreachable!() };
        for block in 0..td {
            let mut out = mat_identity(n);
            for i in 0..m {
                for j in 0..m {
                    out[(block * m + i) * n + (block * m + j)] = data[i * m + j];
                }
            }
            gens.push(Elt::Mat { field: field.clone(), n: n as u32, data: out });
        }
    }
    for g in &t.generators {
        let Elt::Perm(img) = g else { unreachable!() };
        let mut out = vec![0u64; n * n];
        for block in 0..td {
            let target = img[block] as usize;
            for i in 0..m {
                out[(block * m + i) * n + (target * m + i)] = field.one();
            }
        }
        gens.push(Elt::Mat { field: field.clone(), n: n as u32, data: out });
    }
    if gens.is_empty() {
        gens.push(Elt::Mat { field: field.clone(), n: n as u32, data: mat_identity(n) });
    }
    closure(gens, cap)
}

/// Adjoins the scalar ωI to a matrix group.
pub fn with_scalars(r: &FiniteGroup, cap: u64) -> Result<FiniteGroup> {
    let EltKind::Mat { field, n } = &r.kind else {
        return Err(Error::KindMismatch("with_scalars needs a matrix group".into()));
    };
    let nn = *n as usize;
    let omega = field.primitive_element();
    let mut data = vec![0u64; nn * nn];
    for i in 0..nn {
        data[i * nn + i] = omega;
    }
    let mut gens = r.generators.clone();
    gens.push(Elt::Mat { field: field.clone(), n: *n, data });
    closure(gens, cap)
}

/// The quaternion group Q₈ ≤ GL_2(q) (q odd): ⟨X, Y⟩ with X = [[0,1],[−1,0]]
/// and Y = [[a,b],[b,−a]], where (a,b) is the lexicographically least
/// solution of a² + b² = −1 in GF(q).
pub fn q8_in_gl2(q: u64, cap: u64) -> Result<FiniteGroup> {
    let (p, _) = arith::prime_power(q)?;
    if p == 2 {
        return Err(Error::HypothesisViolated("q must be odd".into()));
    }
    let field = field_for(q)?;
    let minus_one = field.neg(field.one());
    let mut found = None;
    'outer: for a in 0..q {
        for b in 0..q {
            if field.add(field.mul(a, a), field.mul(b, b)) == minus_one {
                found = Some((a, b));
                break 'outer;
            }
        }
    }
    let (a, b) = found.ok_or_else(|| {
        Error::NoSolution(format!("no solution of a²+b²=−1 in GF({q}) — impossible for odd q"))
    })?;
    let x = Elt::Mat { field: field.clone(), n: 2, data: vec![0, field.one(), minus_one, 0] };
    let y = Elt::Mat { field: field.clone(), n: 2, data: vec![a, b, b, field.neg(a)] };
    let g = closure(vec![x, y], cap)?;
    assert_eq!(g.order(), 8, "Q₈ order check");
    let involutions = (0..g.order() as usize).filter(|&i| g.element_order(i) == 2).count();
    assert_eq!(involutions, 1, "Q₈ has a unique involution");
    Ok(g)
}

/// Full-scan normalizer: the indices g ∈ ambient with g·H·g⁻¹ = H.
pub fn normalizer_in(ambient: &FiniteGroup, h: &[usize]) -> Vec<usize> {
    let hset: std::collections::HashSet<usize> = h.iter().copied().collect();
    let mut out = Vec::new();
    'outer: for g in 0..ambient.order() as usize {
        let ginv = ambient.inv_idx(g);
        for &x in h {
            let conj = ambient.mul_idx(ambient.mul_idx(g, x), ginv);
            if !hset.contains(&conj) {
                continue 'outer;
            }
        }
        out.push(g);
    }
    out
}

/// 2.Alt_5 ≤ SL_2(q): deterministic search over pairs (x, y) with |x| = 4,
/// |y| = 10 in element-index order, accepting the first closure of order 120
/// with a unique involution.
pub fn two_alt5_in_sl2(q: u64, cap: u64) -> Result<FiniteGroup> {
    let s = sl(2, q, cap)?;
    let xs: Vec<usize> = (0..s.order() as usize).filter(|&i| s.element_order(i) == 4).collect();
    let ys: Vec<usize> = (0..s.order() as usize).filter(|&i| s.element_order(i) == 10).collect();
    for &xi in &xs {
        for &yi in &ys {
            let g = match closure(vec![s.elements[xi].clone(), s.elements[yi].clone()], 120) {
                Ok(g) => g,
                Err(Error::CapExceeded(_)) => continue,
                Err(e) => return Err(e),
            };
            if g.order() != 120 {
                continue;
            }
            let involutions =
                (0..g.order() as usize).filter(|&i| g.element_order(i) == 2).count();
            if involutions == 1 {
                return Ok(g);
            }
        }
    }
    Err(Error::NotFound(format!(
        "no 2.Alt_5 inside SL_2({q}) — requires q ≡ ±1 mod 5"
    )))
}

/// PSL_2(q) = L_2(q) acting on the projective line (q+1 points, ∞ last):
/// generated by the translations z ↦ z + ωⁱ (one per basis power) and the
/// inversion z ↦ −1/z.
pub fn psl2(q: u64, cap: u64) -> Result<FiniteGroup> {
    let (p, f) = arith::prime_power(q)?;
    let field = field_for(q)?;
    let deg = (q + 1) as u32;
    let inf = q as u32;
    let mut gens = Vec::new();
    let omega = field.primitive_element();
    let mut w = field.one();
    for _ in 0..f {
        let mut v = vec![0u32; deg as usize];
        for z in 0..q {
            v[z as usize] = field.add(z, w) as u32;
        }
        v[inf as usize] = inf;
        gens.push(Elt::Perm(v));
        w = field.mul(w, omega);
    }
    let mut v = vec![0u32; deg as usize];
    v[0] = inf;
    v[inf as usize] = 0;
    for z in 1..q {
        v[z as usize] = field.neg(field.inv(z)?) as u32;
    }
    gens.push(Elt::Perm(v));
    let g = closure(gens, cap)?;
    let expect = q * (q * q - 1) / if p == 2 { 1 } else { 2 };
    assert_eq!(g.order(), expect, "PSL_2 order check");
    Ok(g)
}

/// The extremal irreducible p′-subgroup tower R ≀ S ≤ GL_{rm}(q), where R is
/// the base-case catalog entry for q and S is the (k−1)-level extremal
/// permutation tower for p = char(q); k = 1 gives R alone.
pub fn extremal_linear(q: u64, k: u32, cap: u64) -> Result<FiniteGroup> {
    let (p, _) = arith::prime_power(q)?;
    if k == 0 {
        return Err(Error::HypothesisViolated("need k >= 1".into()));
    }
    if q == 3 {
        return Err(Error::Unsupported(
            "the q = 3 base case (an extraspecial 2^{1+4} normalizer in GL_4(3)) is not \
             constructed; its bound value 640 is verified arithmetically"
                .into(),
        ));
    }
    let r = if q == 2 {
        gamma_l1(3, 2, cap)?
    } else if q == 9 || q == 27 {
        gamma_l1(2, q, cap)?
    } else if q == 5 || q == 7 {
        let ambient = gl(2, q, cap)?;
        let q8 = q8_in_gl2(q, cap)?;
        let hidx: Vec<usize> = q8
            .elements
            .iter()
            .map(|e| ambient.index_of(e).expect("Q8 lies in GL_2(q)"))
            .collect();
        ambient.subgroup_from_indices(&normalizer_in(&ambient, &hidx))?
    } else if q == 11 {
        with_scalars(&two_alt5_in_sl2(11, cap)?, cap)?
    } else {
        gl(1, q, cap)?
    };
    let tower = extremal_tower(p, k - 1, cap)?;
    let g = wreath_mat(&r, &tower, cap)?;
    assert!(g.order() % p != 0, "extremal linear group must be a p'-group");
    if let EltKind::Mat { n, .. } = &g.kind {
        if (q as u128).pow(*n) <= 1_000_000 {
            assert!(is_irreducible(&g)?, "extremal linear group must be irreducible");
        }
    }
    Ok(g)
}

/// Spin test: true iff every nonzero row vector generates the full space
/// under the group's generators.
pub fn is_irreducible(g: &FiniteGroup) -> Result<bool> {
    let EltKind::Mat { field, n } = &g.kind else {
        return Err(Error::KindMismatch("irreducibility applies to matrix groups".into()));
    };
    let n = *n as usize;
    let q = field.q;
    let total = q.checked_pow(n as u32).filter(|&v| v <= 1_000_000);
    let Some(total) = total else {
        return Err(Error::CapExceeded(1_000_000));
    };
    let mats: Vec<&Vec<u64>> = g
        .generators
        .iter()
        .map(|e| match e {
            Elt::Mat { data, .. } => data,
            _ => unreachable!(),
        })
        .collect();
    let apply = |v: &[u64], m: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = field.add(*o, field.mul(vi, m[i * n + j]));
            }
        }
        out
    };
    let mut counter = vec![0u64; n];
    for _ in 1..total {
        // next vector (odometer over packed values)
        let mut i = 0;
        loop {
            counter[i] += 1;
            if counter[i] < q {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
        // spin the submodule generated by `counter`
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new(); // (pivot, normalized row)
        let mut queue: Vec<Vec<u64>> = Vec::new();
        let insert = |basis: &mut Vec<(usize, Vec<u64>)>,
                          queue: &mut Vec<Vec<u64>>,
                          mut v: Vec<u64>|
         -> Result<()> {
            for (pivot, row) in basis.iter() {
                if v[*pivot] != 0 {
                    let c = v[*pivot];
                    for j in 0..n {
                        v[j] = field.sub(v[j], field.mul(c, row[j]));
                    }
                }
            }
            if let Some(pivot) = v.iter().position(|&x| x != 0) {
                let inv = field.inv(v[pivot])?;
                for x in v.iter_mut() {
                    *x = field.mul(*x, inv);
                }
                basis.push((pivot, v.clone()));
                queue.push(v);
            }
            Ok(())
        };
        insert(&mut basis, &mut queue, counter.clone())?;
        while let Some(v) = queue.pop() {
            if basis.len() == n {
                break;
            }
            for m in &mats {
                insert(&mut basis, &mut queue, apply(&v, m))?;
                if basis.len() == n {
                    break;
                }
            }
        }
        if basis.len() < n {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Expression language
// ---------------------------------------------------------------------------

/// Abstract syntax for the CLI's group constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Sym(u32),
    Alt(u32),
    Cyclic(u32),
    Dihedral(u32),
    Gl(u32, u64),
    Sl(u32, u64),
    GammaL1(u32, u64),
    Hall(Box<GroupExpr>, u64),
    Wreath(Box<GroupExpr>, Box<GroupExpr>),
    Direct(Box<GroupExpr>, Box<GroupExpr>),
    ExtremalPerm { p: u64, k: u32 },
    ExtremalLinear { q: u64, k: u32 },
    Scalars(Box<GroupExpr>),
    GensFile(String),
}

/// Evaluates an expression into a concrete group under the enumeration cap.
pub fn eval(expr: &GroupExpr, cap: u64) -> Result<FiniteGroup> {
    match expr {
        GroupExpr::Sym(n) => sym(*n, cap),
        GroupExpr::Alt(n) => alt(*n, cap),
        GroupExpr::Cyclic(n) => cyclic(*n, cap),
        GroupExpr::Dihedral(n) => dihedral(*n, cap),
        GroupExpr::Gl(n, q) => gl(*n, *q, cap),
        GroupExpr::Sl(n, q) => sl(*n, *q, cap),
        GroupExpr::GammaL1(n, q) => gamma_l1(*n, *q, cap),
        GroupExpr::Hall(inner, p) => {
            let GroupExpr::GammaL1(n, q) = inner.as_ref() else {
                return Err(Error::Unsupported("hall(...) expects gammaL1(n,q) inside".into()));
            };
            let (char_p, _) = arith::prime_power(*q)?;
            if char_p != *p {
                return Err(Error::HypothesisViolated(format!(
                    "hall p = {p} must be the characteristic of GF({q})"
                )));
            }
            hall_pprime_gamma_l1(*n, *q, cap)
        }
        GroupExpr::Wreath(a, b) => {
            let (ga, gb) = (eval(a, cap)?, eval(b, cap)?);
            match (&ga.kind, &gb.kind) {
                (EltKind::Perm { .. }, EltKind::Perm { .. }) => wreath_perm(&ga, &gb, cap),
                (EltKind::Mat { .. }, EltKind::Perm { .. }) => wreath_mat(&ga, &gb, cap),
                _ => Err(Error::KindMismatch(
                    "wreath needs (perm, perm) or (matrix, perm)".into(),
                )),
            }
        }
        GroupExpr::Direct(a, b) => direct_product(&eval(a, cap)?, &eval(b, cap)?, cap),
        GroupExpr::ExtremalPerm { p, k } => extremal_perm(*p, *k, cap),
        GroupExpr::ExtremalLinear { q, k } => extremal_linear(*q, *k, cap),
        GroupExpr::Scalars(inner) => with_scalars(&eval(inner, cap)?, cap),
        GroupExpr::GensFile(path) => {
            let text = std::fs::read_to_string(path)?;
            crate::group::parse_group(&text, cap)
        }
    }
}

/// Parses the CLI's expression syntax; errors cite byte offsets.
pub fn parse_expr(s: &str) -> Result<GroupExpr> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(Error::Parse { offset: p.pos, msg: "trailing input".into() });
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

/// One parsed argument: a bare value, a `name=value` pair, or a nested
/// expression.
enum Arg {
    Num(u64),
    Named(String, u64),
    Expr(GroupExpr),
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { offset: self.pos, msg: msg.into() })
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a name");
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { offset: start, msg: "number out of range".into() })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.s.len() && self.s[self.pos] == c {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(Arg::Num(self.number()?));
        }
        let save = self.pos;
        let name = self.ident()?;
        if self.peek() == Some(b'=') {
            self.expect(b'=')?;
            let v = self.number()?;
            return Ok(Arg::Named(name, v));
        }
        self.pos = save;
        Ok(Arg::Expr(self.expr()?))
    }

    fn args(&mut self) -> Result<Vec<Arg>> {
        self.expect(b'(')?;
        let mut out = Vec::new();
        if self.peek() == Some(b')') {
            self.expect(b')')?;
            return Ok(out);
        }
        loop {
            out.push(self.arg()?);
            match self.peek() {
                Some(b',') => self.expect(b',')?,
                Some(b')') => {
                    self.expect(b')')?;
                    return Ok(out);
                }
                _ => return self.err("expected ',' or ')'"),
            }
        }
    }

    fn get_num(&self, args: &[Arg], idx: usize, name: &str, head_off: usize) -> Result<u64> {
        for a in args {
            if let Arg::Named(n, v) = a {
                if n == name {
                    return Ok(*v);
                }
            }
        }
        if let Some(Arg::Num(v)) = args.get(idx) {
            return Ok(*v);
        }
        Err(Error::Parse { offset: head_off, msg: format!("missing argument '{name}'") })
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        let head_off = self.pos;
        let name = self.ident()?;
        if name == "gens" {
            self.expect(b'@')?;
            let start = self.pos;
            while self.pos < self.s.len()
                && !matches!(self.s[self.pos], b',' | b')' | b' ' | b'\t' | b'\n')
            {
                self.pos += 1;
            }
            if self.pos == start {
                return self.err("expected a file path after gens@");
            }
            return Ok(GroupExpr::GensFile(
                String::from_utf8_lossy(&self.s[start..self.pos]).into_owned(),
            ));
        }
        let args = self.args()?;
        let two_exprs = |args: Vec<Arg>| -> Result<(GroupExpr, GroupExpr)> {
            let mut it = args.into_iter();
            match (it.next(), it.next(), it.next()) {
                (Some(Arg::Expr(a)), Some(Arg::Expr(b)), None) => Ok((a, b)),
                _ => Err(Error::Parse {
                    offset: head_off,
                    msg: "expected two group expressions".into(),
                }),
            }
        };
        match name.as_str() {
            "sym" => Ok(GroupExpr::Sym(self.get_num(&args, 0, "n", head_off)? as u32)),
            "alt" => Ok(GroupExpr::Alt(self.get_num(&args, 0, "n", head_off)? as u32)),
            "cyclic" => Ok(GroupExpr::Cyclic(self.get_num(&args, 0, "n", head_off)? as u32)),
            "dihedral" => Ok(GroupExpr::Dihedral(self.get_num(&args, 0, "n", head_off)? as u32)),
            "gl" => Ok(GroupExpr::Gl(
                self.get_num(&args, 0, "n", head_off)? as u32,
                self.get_num(&args, 1, "q", head_off)?,
            )),
            "sl" => Ok(GroupExpr::Sl(
                self.get_num(&args, 0, "n", head_off)? as u32,
                self.get_num(&args, 1, "q", head_off)?,
            )),
            "gammaL1" | "gammal1" => Ok(GroupExpr::GammaL1(
                self.get_num(&args, 0, "n", head_off)? as u32,
                self.get_num(&args, 1, "q", head_off)?,
            )),
            "hall" => {
                let mut inner = None;
                let mut p = None;
                for a in args {
                    match a {
                        Arg::Expr(e) => inner = Some(e),
                        Arg::Named(n, v) if n == "p" => p = Some(v),
                        _ => {
                            return Err(Error::Parse {
                                offset: head_off,
                                msg: "hall expects (gammaL1(n,q), p=P)".into(),
                            })
                        }
                    }
                }
                match (inner, p) {
                    (Some(e), Some(p)) => Ok(GroupExpr::Hall(Box::new(e), p)),
                    _ => Err(Error::Parse {
                        offset: head_off,
                        msg: "hall expects (gammaL1(n,q), p=P)".into(),
                    }),
                }
            }
            "wreath" => {
                let (a, b) = two_exprs(args)?;
                Ok(GroupExpr::Wreath(Box::new(a), Box::new(b)))
            }
            "direct" => {
                let (a, b) = two_exprs(args)?;
                Ok(GroupExpr::Direct(Box::new(a), Box::new(b)))
            }
            "extremal_perm" => Ok(GroupExpr::ExtremalPerm {
                p: self.get_num(&args, 0, "p", head_off)?,
                k: self.get_num(&args, 1, "k", head_off)? as u32,
            }),
            "extremal_linear" => Ok(GroupExpr::ExtremalLinear {
                q: self.get_num(&args, 0, "q", head_off)?,
                k: self.get_num(&args, 1, "k", head_off)? as u32,
            }),
            "scalars" => {
                let mut it = args.into_iter();
                match (it.next(), it.next()) {
                    (Some(Arg::Expr(e)), None) => Ok(GroupExpr::Scalars(Box::new(e))),
                    _ => Err(Error::Parse {
                        offset: head_off,
                        msg: "scalars expects one group expression".into(),
                    }),
                }
            }
            other => Err(Error::Parse {
                offset: head_off,
                msg: format!("unknown constructor '{other}'"),
            }),
        }
    }
}
