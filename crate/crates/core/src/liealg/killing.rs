use super::algebra::{LieAlgebra, Matrix};
use super::audit::AuditReport;
use super::label::Element;
use crate::error::Result;
use crate::exactfield::FieldElement;
use crate::rootsys::Root;

/// `K_ij = tr(ad b_i ∘ ad b_j)`.
pub fn killing_form(alg: &LieAlgebra) -> Result<Matrix> {
    let ads: Vec<Matrix> =
        alg.basis().iter().map(|&b| alg.adjoint_matrix(&Element::basis(b))).collect::<Result<_>>()?;
    let n = alg.dim();
    let mut k = vec![vec![FieldElement::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let t = trace_of_product(&ads[i], &ads[j]);
            k[j][i] = t.clone();
            k[i][j] = t;
        }
    }
    Ok(k)
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> FieldElement {
    let mut t = FieldElement::zero();
    for (r, row) in a.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            if !x.is_zero() && !b[c][r].is_zero() {
                t = &t + &(x * &b[c][r]);
            }
        }
    }
    t
}

/// `K(x, y)` for arbitrary elements.
pub fn killing_pair(alg: &LieAlgebra, k: &Matrix, x: &Element, y: &Element) -> Result<FieldElement> {
    let (u, v) = (alg.coords(x)?, alg.coords(y)?);
    let mut s = FieldElement::zero();
    for (i, ui) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, vj) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            s = &s + &(&(ui * vj) * &k[i][j]);
        }
    }
    Ok(s)
}

/// Symmetry, invariance `K([x,y],z) + K(y,[x,z]) = 0`, root-space
/// orthogonality and non-degeneracy on the Cartan block.
pub fn check_killing(alg: &LieAlgebra) -> Result<AuditReport> {
    let k = killing_form(alg)?;
    let b = alg.basis();
    let n = b.len();
    let mut rep = AuditReport::new();
    for i in 0..n {
        for j in i + 1..n {
            rep.record("killing-symmetric", format!("K({}, {})", b[i], b[j]), k[i][j].clone(), k[j][i].clone());
        }
    }
    for i in 0..n {
        for j in 0..n {
            let xy = alg.entry(i, j);
            for l in 0..n {
                let zl = Element::basis(b[l]);
                let xz = alg.entry(i, l);
                let lhs = &killing_pair(alg, &k, xy, &zl)? + &killing_pair(alg, &k, &Element::basis(b[j]), xz)?;
                rep.record(
                    "killing-invariant",
                    format!("({}, {}, {})", b[i], b[j], b[l]),
                    lhs,
                    FieldElement::zero(),
                );
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            let (x, y) = (b[i], b[j]);
            if !x.is_cartan() && !y.is_cartan() && !(x.weight() + y.weight()).is_zero() {
                rep.record("killing-orthogonal", format!("K({x}, {y})"), k[i][j].clone(), FieldElement::zero());
            }
        }
    }
    let h: Vec<usize> = (0..n).filter(|&i| b[i].is_cartan()).collect();
    if h.len() == 2 {
        let det = &(&k[h[0]][h[0]] * &k[h[1]][h[1]]) - &(&k[h[0]][h[1]] * &k[h[1]][h[0]]);
        let nonzero = FieldElement::from_int(i64::from(!det.is_zero()));
        rep.record("killing-nondegenerate", format!("det K|h = {det} is nonzero"), nonzero, FieldElement::one());
    }
    Ok(rep)
}

/// One entry per ordered pair of positive roots (α, β): `K(H_α, H_β)` and
/// `⟨β, H_α⟩`, with `H_γ` read from the table.
pub fn cartan_killing_pairs(alg: &LieAlgebra) -> Result<Vec<(Root, Root, FieldElement, FieldElement)>> {
    let k = killing_form(alg)?;
    let pos = alg.root_system().positive_roots();
    let mut out = Vec::new();
    for &a in pos {
        let ha = alg.cartan_element(a)?;
        for &b in pos {
            let hb = alg.cartan_element(b)?;
            out.push((a, b, killing_pair(alg, &k, &ha, &hb)?, alg.pairing(b, a)?));
        }
    }
    Ok(out)
}

/// The constant `c` with `K(H_α, H_β) = c·⟨β, H_α⟩` for every pair, if one exists.
pub fn global_killing_constant(alg: &LieAlgebra) -> Result<Option<FieldElement>> {
    let mut c: Option<FieldElement> = None;
    for (_, _, kab, pab) in cartan_killing_pairs(alg)? {
        if pab.is_zero() {
            if !kab.is_zero() {
                return Ok(None);
            }
            continue;
        }
        let r = &kab / &pab;
        match &c {
            Some(prev) if *prev != r => return Ok(None),
            _ => c = Some(r),
        }
    }
    Ok(c)
}
