use super::word::{Letter, WordSum};
use super::CoordError;
use crate::fock::{ModuleVector, SpaceDescriptor};
use crate::indexsets::{sharp_entry, Flavor, IndexMatrix};

/// The word of t^(A): letters in lexicographic order, t_{ij} repeated a_ij times.
pub fn lex_word(a: &IndexMatrix) -> Vec<Letter> {
    let mut w = Vec::new();
    for i in a.rows() {
        for j in a.cols() {
            w.extend(std::iter::repeat_n((i, j), a.get(i, j) as usize));
        }
    }
    w
}

/// The word of t'^(A): column-major order.
pub fn column_word(a: &IndexMatrix) -> Vec<Letter> {
    let mut w = Vec::new();
    for j in a.cols() {
        for i in a.rows() {
            w.extend(std::iter::repeat_n((i, j), a.get(i, j) as usize));
        }
    }
    w
}

/// The word of t̃^(A): fundamental-domain letters (i,j) ≥ (0,0) in order,
/// each repeated a♯_ij times.
pub fn fd_word(a: &IndexMatrix) -> Result<Vec<Letter>, CoordError> {
    let mut w = Vec::new();
    for i in a.rows().filter(|&i| i >= 0) {
        for j in a.cols() {
            if (i, j) < (0, 0) {
                continue;
            }
            let k = sharp_entry(a, i, j)?;
            w.extend(std::iter::repeat_n((i, j), k as usize));
        }
    }
    Ok(w)
}

/// Type-A label of an ordered word in rows 1..=m, columns 1..=n.
pub fn label_from_word(w: &[Letter], m: usize, n: usize) -> Result<IndexMatrix, CoordError> {
    let mut rows = vec![vec![0u32; n]; m];
    for &(i, j) in w {
        if i < 1 || j < 1 || i as usize > m || j as usize > n {
            return Err(CoordError::LetterOutOfRange(i, j));
        }
        rows[i as usize - 1][j as usize - 1] += 1;
    }
    Ok(IndexMatrix::from_rows(Flavor::A, &rows)?)
}

/// Label of an ordered fundamental-domain word: each letter contributes
/// E^θ_{ij} (so 2 at the center) on top of the base E_00.
pub fn label_from_fd_word(w: &[Letter], flavor: Flavor, m: usize, n: usize) -> Result<IndexMatrix, CoordError> {
    let (mi, ni) = (m as i32, n as i32);
    let mut rows = vec![vec![0u32; 2 * n + 1]; 2 * m + 1];
    rows[m][n] = 1;
    for &(i, j) in w {
        if i.abs() > mi || j.abs() > ni || (i, j) < (0, 0) {
            return Err(CoordError::LetterOutOfRange(i, j));
        }
        rows[(i + mi) as usize][(j + ni) as usize] += 1;
        rows[(mi - i) as usize][(ni - j) as usize] += 1;
    }
    Ok(IndexMatrix::from_rows(flavor, &rows)?)
}

/// Reads ordered words as basis labels of `space`.
pub fn words_to_vector(sum: &WordSum, space: &SpaceDescriptor) -> Result<ModuleVector, CoordError> {
    let mut out = ModuleVector::zero(*space);
    for (w, c) in sum.terms() {
        let label = match space.flavor {
            Flavor::A => label_from_word(w, space.m, space.n)?,
            flavor => label_from_fd_word(w, flavor, space.m, space.n)?,
        };
        out.add_term(label, c);
    }
    Ok(out)
}
