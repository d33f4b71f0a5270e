//! Model description files: Lie algebra structure constants in Salamon-style
//! shorthand plus one generalized-structure specification, and the
//! Chevalley-Eilenberg differential they induce.
//!
//! File format (UTF-8, `#` comments, statements separated by newlines or
//! semicolons):
//!
//! ```text
//! dim <2n>
//! algebra (<terms>, <terms>, ...)          # one entry per generator, "0" for closed
//! structure complex J = [[...], ...]       # 2n x 2n rationals
//! structure symplectic omega = <2-form>
//! structure spinor rho = <mixed form>      # complex coefficients like 1/2+3/4i
//! structure matrix JJ = [[...], ...]       # 4n x 4n on (e_1..e_2n, e^1..e^2n)
//! ```
//!
//! Algebra entries use the digit shorthand: `12+34` means
//! d e^k = e^1^e^2 + e^3^e^4, and rational multiples like `1/2*12` or signs
//! like `-13` are accepted. Form expressions are signed sums of terms like
//! `3/2*e134`, `i*e12` or a bare scalar.

use crate::exterior::{mask_name, Form};
use crate::linalg::Matrix;
use crate::scalar::{display_gaussian, gi, Gaussian, Rational};
use crate::{FormC, Mat};
use num_traits::{One, Zero};

/// Syntax or consistency error in a model file, with position information.
#[derive(Debug, Clone, thiserror::Error)]
#[error("{message} (line {line}, column {column})")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    fn new(message: impl Into<String>, line: usize, column: usize) -> Self {
        ParseError {
            message: message.into(),
            line,
            column,
        }
    }
}

/// Finite-dimensional model: generators e_1..e_2n with the differentials of
/// their duals given as exact 2-forms, and the induced degree-1 derivation
/// on the whole exterior algebra.
#[derive(Clone, Debug)]
pub struct LieModel {
    n2: usize,
    structure_terms: Vec<FormC>,
    d_matrix: Mat,
}

impl LieModel {
    /// Builds the model from per-generator 2-forms d e^k.
    pub fn new(n2: usize, structure_terms: Vec<FormC>) -> Self {
        assert_eq!(
            structure_terms.len(),
            n2,
            "one structure form per generator"
        );
        let d_matrix = ce_differential(n2, &structure_terms);
        LieModel {
            n2,
            structure_terms,
            d_matrix,
        }
    }

    pub fn abelian(n2: usize) -> Self {
        Self::new(n2, vec![Form::zero(n2); n2])
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn n(&self) -> usize {
        self.n2 / 2
    }

    /// Dimension of the full complexified exterior algebra, 2^{2n}.
    pub fn total_dim(&self) -> usize {
        1 << self.n2
    }

    pub fn structure_terms(&self) -> &[FormC] {
        &self.structure_terms
    }

    /// Matrix of the Chevalley-Eilenberg differential on the mask-indexed
    /// basis of the exterior algebra.
    pub fn d_matrix(&self) -> &Mat {
        &self.d_matrix
    }

    pub fn d_apply(&self, phi: &FormC) -> FormC {
        Form::from_coords(self.n2, &self.d_matrix.mul_vec(&phi.to_coords()))
    }

    /// Checks d^2 = 0 (the Jacobi identity); reports the first failing
    /// basis monomial otherwise.
    pub fn validate(&self) -> Result<(), String> {
        let d2 = self.d_matrix.mul(&self.d_matrix);
        if d2.is_zero() {
            return Ok(());
        }
        for c in 0..d2.cols() {
            if d2.col(c).iter().any(|x| !x.is_zero()) {
                return Err(format!(
                    "d^2 != 0 on basis monomial {}: Jacobi identity fails",
                    mask_name(c as u32)
                ));
            }
        }
        unreachable!("nonzero matrix with all-zero columns");
    }

    /// Trace of every adjoint map vanishes; this is the hypothesis under
    /// which the star-based dimension equalities are theorems for the model.
    pub fn is_unimodular(&self) -> bool {
        // tr(ad e_j) = sum_k c^k_{jk}; with d e^k = -sum c^k_{ij} e^i^e^j the
        // coefficient of e^j ^ e^k in the structure form of k is -c^k_{jk}.
        for j in 1..=self.n2 {
            let mut trace = Gaussian::zero();
            for (k, form) in self.structure_terms.iter().enumerate() {
                let k_idx = k + 1;
                if k_idx == j {
                    continue;
                }
                let (lo, hi) = (j.min(k_idx), j.max(k_idx));
                let mask = (1u32 << (lo - 1)) | (1u32 << (hi - 1));
                let sign = if j < k_idx {
                    Gaussian::one()
                } else {
                    -Gaussian::one()
                };
                trace -= sign * form.coeff(mask);
            }
            if !trace.is_zero() {
                return false;
            }
        }
        true
    }

    /// Canonical text rendering in the model-file grammar (without a
    /// structure line).
    pub fn print_algebra(&self) -> String {
        let entries: Vec<String> = self
            .structure_terms
            .iter()
            .map(|f| {
                if f.is_zero() {
                    "0".to_string()
                } else {
                    print_algebra_entry(f)
                }
            })
            .collect();
        format!("dim {}\nalgebra ({})", self.n2, entries.join(", "))
    }
}

/// The generalized-structure payload parsed from the single `structure`
/// statement of a model file.
#[derive(Clone, Debug)]
pub enum StructureSpec {
    /// 2n x 2n endomorphism J of T with J^2 = -1.
    ComplexEndomorphism(Mat),
    /// Nondegenerate 2-form.
    SymplecticForm(FormC),
    /// Mixed-degree pure spinor generating the canonical line.
    PureSpinor(FormC),
    /// Raw 4n x 4n matrix on T + T*.
    RawMatrix(Mat),
}

impl StructureSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureSpec::ComplexEndomorphism(_) => "complex",
            StructureSpec::SymplecticForm(_) => "symplectic",
            StructureSpec::PureSpinor(_) => "spinor",
            StructureSpec::RawMatrix(_) => "matrix",
        }
    }

    /// Canonical text rendering of the structure statement.
    pub fn print(&self) -> String {
        match self {
            StructureSpec::ComplexEndomorphism(m) => {
                format!("structure complex J = {}", print_matrix(m))
            }
            StructureSpec::SymplecticForm(f) => {
                format!("structure symplectic omega = {}", print_form(f))
            }
            StructureSpec::PureSpinor(f) => format!("structure spinor rho = {}", print_form(f)),
            StructureSpec::RawMatrix(m) => format!("structure matrix JJ = {}", print_matrix(m)),
        }
    }
}

/// Chevalley-Eilenberg differential: d e^k is the given 2-form, extended as
/// a degree-1 graded derivation d(a^b) = da^b + (-1)^{|a|} a^db.
pub fn ce_differential(n2: usize, structure_terms: &[FormC]) -> Mat {
    let dim = 1usize << n2;
    let cols: Vec<Vec<Gaussian>> = (0..dim)
        .map(|mask| {
            let mask = mask as u32;
            let mut out = Form::zero(n2);
            let mut position = 0u32;
            for (i, structure_form) in structure_terms.iter().enumerate() {
                let bit = 1u32 << i;
                if mask & bit == 0 {
                    continue;
                }
                let rest = Form::monomial(n2, mask & !bit, Gaussian::one());
                let mut term = structure_form.wedge(&rest);
                if position % 2 == 1 {
                    term = term.scale(&-Gaussian::one());
                }
                out = out.add(&term);
                position += 1;
            }
            out.to_coords()
        })
        .collect();
    Matrix::from_cols(cols)
}

/// Parses a model file into the Lie model and its structure specification.
pub fn parse_model(text: &str) -> Result<(LieModel, StructureSpec), ParseError> {
    let mut dim: Option<usize> = None;
    let mut algebra: Option<Vec<FormC>> = None;
    let mut algebra_pending: Option<Vec<(String, usize, usize)>> = None;
    let mut structure: Option<StructureSpec> = None;

    for (line_no, raw_line) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        for (stmt_offset, stmt) in split_statements(line) {
            let stmt_trim = stmt.trim();
            if stmt_trim.is_empty() {
                continue;
            }
            let col = stmt_offset + (stmt.len() - stmt.trim_start().len()) + 1;
            let (keyword, rest) = match stmt_trim.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (stmt_trim, ""),
            };
            match keyword {
                "dim" => {
                    if dim.is_some() {
                        return Err(ParseError::new("duplicate `dim` declaration", line_no, col));
                    }
                    let value: usize = rest.parse().map_err(|_| {
                        ParseError::new(format!("invalid dimension `{rest}`"), line_no, col)
                    })?;
                    if value == 0 || !value.is_multiple_of(2) {
                        return Err(ParseError::new(
                            format!("dimension must be a positive even number, got {value}"),
                            line_no,
                            col,
                        ));
                    }
                    if value > 8 {
                        return Err(ParseError::new(
                            format!(
                                "dimension {value} exceeds the dense engine limit of 8"
                            ),
                            line_no,
                            col,
                        ));
                    }
                    dim = Some(value);
                }
                "algebra" => {
                    if algebra.is_some() || algebra_pending.is_some() {
                        return Err(ParseError::new(
                            "duplicate `algebra` declaration",
                            line_no,
                            col,
                        ));
                    }
                    let inner = rest
                        .strip_prefix('(')
                        .and_then(|s| s.strip_suffix(')'))
                        .ok_or_else(|| {
                            ParseError::new("algebra list must be parenthesized", line_no, col)
                        })?;
                    let entries: Vec<(String, usize, usize)> = inner
                        .split(',')
                        .map(|e| (e.trim().to_string(), line_no, col))
                        .collect();
                    algebra_pending = Some(entries);
                }
                "structure" => {
                    if structure.is_some() {
                        return Err(ParseError::new(
                            "duplicate `structure` declaration",
                            line_no,
                            col,
                        ));
                    }
                    let n2 = dim
                        .ok_or_else(|| ParseError::new("`structure` before `dim`", line_no, col))?;
                    structure = Some(parse_structure(rest, n2, line_no, col)?);
                }
                other => {
                    return Err(ParseError::new(
                        format!("unknown statement `{other}`"),
                        line_no,
                        col,
                    ));
                }
            }
        }
    }

    let n2 = dim.ok_or_else(|| ParseError::new("missing `dim` declaration", 1, 1))?;
    if let Some(entries) = algebra_pending {
        if entries.len() != n2 {
            let (_, l, c) = entries[0].clone();
            return Err(ParseError::new(
                format!("algebra lists {} entries for dimension {n2}", entries.len()),
                l,
                c,
            ));
        }
        let mut forms = Vec::with_capacity(n2);
        for (entry, l, c) in entries {
            forms.push(parse_algebra_entry(&entry, n2, l, c)?);
        }
        algebra = Some(forms);
    }
    let algebra = algebra.ok_or_else(|| ParseError::new("missing `algebra` declaration", 1, 1))?;
    let structure =
        structure.ok_or_else(|| ParseError::new("missing `structure` declaration", 1, 1))?;

    Ok((LieModel::new(n2, algebra), structure))
}

/// Splits a line on semicolons, keeping byte offsets for error positions.
fn split_statements(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in line.char_indices() {
        if ch == ';' {
            out.push((start, &line[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &line[start..]));
    out
}

fn parse_structure(
    rest: &str,
    n2: usize,
    line: usize,
    col: usize,
) -> Result<StructureSpec, ParseError> {
    let (kind, rest) = rest
        .split_once(char::is_whitespace)
        .ok_or_else(|| ParseError::new("structure kind missing", line, col))?;
    let rhs = rest
        .split_once('=')
        .map(|(_, r)| r.trim())
        .ok_or_else(|| ParseError::new("structure statement needs `= <payload>`", line, col))?;
    match kind {
        "complex" => {
            let m = parse_matrix(rhs, line, col)?;
            if m.rows() != n2 || m.cols() != n2 {
                return Err(ParseError::new(
                    format!(
                        "complex structure J must be {n2}x{n2}, got {}x{}",
                        m.rows(),
                        m.cols()
                    ),
                    line,
                    col,
                ));
            }
            Ok(StructureSpec::ComplexEndomorphism(m))
        }
        "symplectic" => {
            let f = parse_form(rhs, n2, line, col)?;
            if f.degrees() != vec![2] {
                return Err(ParseError::new(
                    "symplectic structure must be a pure 2-form",
                    line,
                    col,
                ));
            }
            Ok(StructureSpec::SymplecticForm(f))
        }
        "spinor" => Ok(StructureSpec::PureSpinor(parse_form(rhs, n2, line, col)?)),
        "matrix" => {
            let m = parse_matrix(rhs, line, col)?;
            if m.rows() != 2 * n2 || m.cols() != 2 * n2 {
                return Err(ParseError::new(
                    format!(
                        "raw structure matrix must be {}x{} on T + T*, got {}x{}",
                        2 * n2,
                        2 * n2,
                        m.rows(),
                        m.cols()
                    ),
                    line,
                    col,
                ));
            }
            Ok(StructureSpec::RawMatrix(m))
        }
        other => Err(ParseError::new(
            format!("unknown structure kind `{other}`"),
            line,
            col,
        )),
    }
}

/// One algebra entry: `0` or a signed sum of optionally-scaled digit pairs.
fn parse_algebra_entry(
    entry: &str,
    n2: usize,
    line: usize,
    col: usize,
) -> Result<FormC, ParseError> {
    if entry == "0" {
        return Ok(Form::zero(n2));
    }
    let mut out = Form::zero(n2);
    for (sign, term) in split_signed_terms(entry) {
        let (coeff_str, digits) = match term.split_once('*') {
            Some((c, d)) => (Some(c.trim()), d.trim()),
            None => (None, term.trim()),
        };
        let mut coeff = match coeff_str {
            Some(c) => parse_rational(c)
                .map(|r| Gaussian::new(r, Rational::zero()))
                .ok_or_else(|| ParseError::new(format!("invalid coefficient `{c}`"), line, col))?,
            None => Gaussian::one(),
        };
        if sign < 0 {
            coeff = -coeff;
        }
        if digits.len() != 2 || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(ParseError::new(
                format!("algebra term `{term}` must name two generator indices"),
                line,
                col,
            ));
        }
        let monomial = digits_to_monomial(digits, n2, line, col)?;
        out = out.add(&monomial.scale(&coeff));
    }
    Ok(out)
}

/// Splits `12+34-2*13` into sign/term pairs; +/- inside parentheses do not
/// split.
fn split_signed_terms(expr: &str) -> Vec<(i32, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut sign = 1i32;
    let mut seen_content = false;
    let mut depth = 0i32;
    for ch in expr.chars() {
        match ch {
            '(' => {
                depth += 1;
                seen_content = true;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            '+' | '-' if depth > 0 => current.push(ch),
            '+' | '-' if seen_content => {
                out.push((sign, current.trim().to_string()));
                current = String::new();
                sign = if ch == '-' { -1 } else { 1 };
                seen_content = false;
            }
            '-' => {
                sign = -sign;
            }
            '+' => {}
            _ => {
                if !ch.is_whitespace() {
                    seen_content = true;
                }
                current.push(ch);
            }
        }
    }
    if !current.trim().is_empty() {
        out.push((sign, current.trim().to_string()));
    }
    out
}

/// Wedge of e^{d1}, e^{d2}, ... for a digit string, with the permutation
/// sign of out-of-order indices.
fn digits_to_monomial(
    digits: &str,
    n2: usize,
    line: usize,
    col: usize,
) -> Result<FormC, ParseError> {
    let mut form = Form::one(n2);
    let mut seen = 0u32;
    for ch in digits.chars() {
        let idx = ch
            .to_digit(10)
            .ok_or_else(|| ParseError::new(format!("invalid index `{ch}`"), line, col))?
            as usize;
        if idx == 0 || idx > n2 {
            return Err(ParseError::new(
                format!("index {idx} out of range for dimension {n2}"),
                line,
                col,
            ));
        }
        if seen & (1 << (idx - 1)) != 0 {
            return Err(ParseError::new(
                format!("repeated index {idx} in monomial"),
                line,
                col,
            ));
        }
        seen |= 1 << (idx - 1);
        form = form.wedge(&Form::covector(n2, idx));
    }
    Ok(form)
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: num_bigint::BigInt = s.parse().ok()?;
            Some(Rational::from(n))
        }
    }
}

/// Scalar literal: rational, `i`, `3/4i`, a parenthesized scalar
/// expression, or sums thereof handled by the caller's term splitting.
fn parse_scalar_atom(s: &str) -> Option<Gaussian> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
        return parse_scalar_expr(inner);
    }
    if s == "i" {
        return Some(gi());
    }
    if let Some(r) = s.strip_suffix('i') {
        let r = r.trim();
        let re = if r.is_empty() {
            Rational::one()
        } else {
            parse_rational(r)?
        };
        return Some(Gaussian::new(Rational::zero(), re));
    }
    parse_rational(s).map(|r| Gaussian::new(r, Rational::zero()))
}

/// Full scalar expression: signed sum of scalar atoms, e.g. `1/2+3/4i`.
fn parse_scalar_expr(s: &str) -> Option<Gaussian> {
    let terms = split_signed_terms(s);
    if terms.is_empty() {
        return None;
    }
    let mut acc = Gaussian::zero();
    for (sign, term) in terms {
        let mut v = parse_scalar_atom(&term)?;
        if sign < 0 {
            v = -v;
        }
        acc += v;
    }
    Some(acc)
}

/// Form expression: signed sum of terms; each term is a product of scalar
/// atoms and at most one `e<digits>` monomial joined by `*`.
fn parse_form(expr: &str, n2: usize, line: usize, col: usize) -> Result<FormC, ParseError> {
    let mut out = Form::zero(n2);
    let terms = split_signed_terms(expr);
    if terms.is_empty() {
        return Err(ParseError::new("empty form expression", line, col));
    }
    for (sign, term) in terms {
        let mut coeff = if sign < 0 {
            -Gaussian::one()
        } else {
            Gaussian::one()
        };
        let mut monomial = Form::one(n2);
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(ParseError::new(
                    format!("empty factor in `{term}`"),
                    line,
                    col,
                ));
            }
            if let Some(digits) = factor.strip_prefix('e') {
                if digits.chars().all(|c| c.is_ascii_digit()) && !digits.is_empty() {
                    monomial = monomial.wedge(&digits_to_monomial(digits, n2, line, col)?);
                    continue;
                }
            }
            let scalar = parse_scalar_atom(factor).ok_or_else(|| {
                ParseError::new(
                    format!("invalid factor `{factor}` in form expression"),
                    line,
                    col,
                )
            })?;
            coeff *= scalar;
        }
        out = out.add(&monomial.scale(&coeff));
    }
    Ok(out)
}

/// `[[a, b], [c, d]]` matrix literal with complex scalar entries.
fn parse_matrix(s: &str, line: usize, col: usize) -> Result<Mat, ParseError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| ParseError::new("matrix literal must be bracketed", line, col))?;
    let mut rows: Vec<Vec<Gaussian>> = Vec::new();
    let mut depth = 0usize;
    let mut row_start = None;
    for (i, ch) in inner.char_indices() {
        match ch {
            '[' => {
                if depth == 0 {
                    row_start = Some(i + 1);
                }
                depth += 1;
            }
            ']' => {
                if depth == 0 {
                    return Err(ParseError::new("unbalanced brackets in matrix", line, col));
                }
                depth -= 1;
                if depth == 0 {
                    let row_str = &inner[row_start.unwrap()..i];
                    let row: Option<Vec<Gaussian>> =
                        row_str.split(',').map(parse_scalar_expr).collect();
                    let row = row.ok_or_else(|| {
                        ParseError::new(format!("invalid matrix row `{row_str}`"), line, col)
                    })?;
                    rows.push(row);
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(ParseError::new("unbalanced brackets in matrix", line, col));
    }
    if rows.is_empty() {
        return Err(ParseError::new("empty matrix literal", line, col));
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(ParseError::new("ragged matrix literal", line, col));
    }
    Ok(Matrix::from_rows(rows))
}

/// Splits a coefficient into its printed sign and the rendering of its
/// absolute part (negated whole value, not a string hack, so complex
/// literals negate correctly).
fn signed_body(c: &Gaussian) -> (bool, String) {
    let negative = c.re < Rational::zero() || (c.re.is_zero() && c.im < Rational::zero());
    let body_value = if negative { -c.clone() } else { c.clone() };
    (negative, display_gaussian(&body_value))
}

/// Canonical rendering of a form in the grammar the parser accepts.
pub fn print_form(f: &FormC) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(u32, Gaussian)> = f.terms().map(|(m, c)| (m, c.clone())).collect();
    terms.sort_by_key(|(m, _)| (m.count_ones(), *m));
    let mut out = String::new();
    for (idx, (mask, c)) in terms.iter().enumerate() {
        let (negative, body) = signed_body(c);
        // keep complex sums like 1/2+3/4i unambiguous inside a term
        let body = if body.contains('+') || body.contains('-') {
            format!("({body})")
        } else {
            body
        };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if *mask == 0 {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&mask_name(*mask));
        } else {
            out.push_str(&format!("{body}*{}", mask_name(*mask)));
        }
    }
    out
}

fn print_algebra_entry(f: &FormC) -> String {
    let mut terms: Vec<(u32, Gaussian)> = f.terms().map(|(m, c)| (m, c.clone())).collect();
    terms.sort_by_key(|(m, _)| *m);
    let mut out = String::new();
    for (idx, (mask, c)) in terms.iter().enumerate() {
        let (negative, body) = signed_body(c);
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        let digits: String = (0..32)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| (i + 1).to_string())
            .collect();
        if body == "1" {
            out.push_str(&digits);
        } else {
            out.push_str(&format!("{body}*{digits}"));
        }
    }
    out
}

fn print_matrix(m: &Mat) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let entries: Vec<String> = (0..m.cols())
                .map(|c| display_gaussian(&m[(r, c)]))
                .collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Canonical rendering of a whole model file.
pub fn print_model(model: &LieModel, structure: &StructureSpec) -> String {
    format!("{}\n{}\n", model.print_algebra(), structure.print())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gint, gq};

    fn e(n2: usize, indices: &[usize]) -> FormC {
        indices
            .iter()
            .fold(Form::one(n2), |acc, &i| acc.wedge(&Form::covector(n2, i)))
    }

    #[test]
    fn parses_the_kodaira_thurston_symplectic_model() {
        let text = "dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23";
        let (model, spec) = parse_model(text).unwrap();
        assert_eq!(model.n2(), 4);
        assert_eq!(model.structure_terms()[3], e(4, &[1, 2]));
        match spec {
            StructureSpec::SymplecticForm(f) => {
                assert_eq!(f, e(4, &[1, 4]).add(&e(4, &[2, 3])));
            }
            other => panic!("expected symplectic spec, got {other:?}"),
        }
        model.validate().unwrap();
    }

    #[test]
    fn parses_the_complex_torus() {
        let text = "dim 2; algebra (0,0); structure complex J = [[0,-1],[1,0]]";
        let (model, spec) = parse_model(text).unwrap();
        assert!(model.d_matrix().is_zero());
        match spec {
            StructureSpec::ComplexEndomorphism(j) => {
                assert_eq!(j[(0, 1)], gint(-1));
                assert_eq!(j[(1, 0)], gint(1));
            }
            other => panic!("expected complex spec, got {other:?}"),
        }
    }

    #[test]
    fn rejects_out_of_range_indices_and_odd_dims() {
        let err =
            parse_model("dim 4; algebra (0,0,0,15); structure symplectic omega = e12").unwrap_err();
        assert!(err.message.contains("out of range"), "{}", err.message);
        let err =
            parse_model("dim 3; algebra (0,0,0); structure symplectic omega = e12").unwrap_err();
        assert!(err.message.contains("even"), "{}", err.message);
    }

    #[test]
    fn rejects_duplicates_and_missing_statements() {
        assert!(parse_model("dim 4; dim 4")
            .unwrap_err()
            .message
            .contains("duplicate"));
        assert!(parse_model("algebra (0,0)")
            .unwrap_err()
            .message
            .contains("missing `dim`"));
        assert!(parse_model("dim 2; algebra (0,0)")
            .unwrap_err()
            .message
            .contains("missing `structure`"));
        assert!(parse_model(
            "dim 2; algebra (0,0); structure symplectic omega = e12; structure symplectic omega = e12"
        )
        .unwrap_err()
        .message
        .contains("duplicate"));
    }

    #[test]
    fn rational_coefficients_and_signs_in_algebra_entries() {
        let (model, _) = parse_model(
            "dim 4; algebra (0, 0, -13, 1/2*12+34); structure symplectic omega = e13 + e24",
        )
        .unwrap();
        assert_eq!(model.structure_terms()[2], e(4, &[1, 3]).scale(&gint(-1)));
        assert_eq!(
            model.structure_terms()[3],
            e(4, &[1, 2]).scale(&gq(1, 2)).add(&e(4, &[3, 4]))
        );
    }

    #[test]
    fn complex_coefficients_in_spinor_forms() {
        let (_, spec) =
            parse_model("dim 2; algebra (0,0); structure spinor rho = 1 + i*e12").unwrap();
        match spec {
            StructureSpec::PureSpinor(f) => {
                assert_eq!(f.coeff(0), gint(1));
                assert_eq!(f.coeff(0b11), gi());
            }
            other => panic!("expected spinor spec, got {other:?}"),
        }
        let (_, spec) =
            parse_model("dim 2; algebra (0,0); structure spinor rho = 1/2+3/4i*e12 - e1").unwrap();
        match spec {
            StructureSpec::PureSpinor(f) => {
                assert_eq!(f.coeff(0), gq(1, 2));
                assert_eq!(f.coeff(0b11), crate::scalar::gauss(0, 1, 3, 4));
                assert_eq!(f.coeff(0b01), gint(-1));
            }
            other => panic!("expected spinor spec, got {other:?}"),
        }
    }

    #[test]
    fn ce_differential_respects_the_derivation_rule() {
        // (0,0,0,12): d e^4 = e^{12}; the derivation rule then fixes
        // d(e^3 ^ e^4) = -e^3 ^ e^{12} = -e^{123}.
        let (model, _) =
            parse_model("dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23")
                .unwrap();
        let d34 = model.d_apply(&e(4, &[3, 4]));
        assert_eq!(d34, e(4, &[1, 2, 3]).scale(&gint(-1)));
        // degree is raised by exactly one on every monomial
        for mask in 0..(1u32 << 4) {
            let dm = model.d_apply(&Form::monomial(4, mask, gint(1)));
            for d in dm.degrees() {
                assert_eq!(d, mask.count_ones() + 1);
            }
        }
    }

    #[test]
    fn iwasawa_model_satisfies_jacobi() {
        let (model, _) = parse_model(
            "dim 6; algebra (0,0,0,0,13+42,14+23); structure complex J = [[0,-1,0,0,0,0],[1,0,0,0,0,0],[0,0,0,-1,0,0],[0,0,1,0,0,0],[0,0,0,0,0,-1],[0,0,0,0,1,0]]",
        )
        .unwrap();
        model.validate().unwrap();
    }

    #[test]
    fn jacobi_violation_is_reported_with_the_offending_monomial() {
        // (0,0,12,13): d^2 e^{?} picks up e^{123} from d(e^{13}).
        let text = "dim 4; algebra (0,0,12,13); structure symplectic omega = e14 + e23";
        let (model, _) = parse_model(text).unwrap();
        // independent expansion: d e^4 = e^{13}, d(e^{13}) = -e^1 ^ d e^3
        //  = -e^1 ^ e^{12} = 0 ... so check which monomial actually fails.
        let verdict = model.validate();
        // d^2 e^4 = d(e^{13}) = de^1^e^3 - e^1^de^3 = -e^{112} = 0; here
        // Jacobi in fact holds, so validation passes.
        assert!(verdict.is_ok());
        // A genuine violation: d e^3 = e^{12}, d e^4 = e^{34} makes
        // d^2 e^4 = d(e^{34}) = e^{12}^e^4 - e^3^e^{34}... nonzero.
        let text = "dim 4; algebra (0,0,12,34); structure symplectic omega = e14 + e23";
        let (model, _) = parse_model(text).unwrap();
        let verdict = model.validate();
        assert!(verdict.is_err());
        assert!(verdict.unwrap_err().contains('e'));
    }

    #[test]
    fn print_then_parse_is_the_identity() {
        let sources = [
            "dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23",
            "dim 2; algebra (0,0); structure complex J = [[0,-1],[1,0]]",
            "dim 2; algebra (0,0); structure spinor rho = 1 + i*e12",
            "dim 2; algebra (0,0); structure spinor rho = 1 + (1/2-3/4i)*e12",
            "dim 4; algebra (0, 0, -13, 1/2*12+34); structure symplectic omega = e13 + e24",
        ];
        for src in sources {
            let (model, spec) = parse_model(src).unwrap();
            let printed = print_model(&model, &spec);
            let (model2, spec2) = parse_model(&printed).unwrap();
            assert_eq!(model.n2(), model2.n2());
            assert_eq!(model.structure_terms(), model2.structure_terms());
            assert_eq!(printed, print_model(&model2, &spec2));
        }
    }

    mod roundtrip {
        use super::*;
        use proptest::prelude::*;

        fn coeff() -> impl Strategy<Value = Gaussian> {
            ((-5i64..=5), (1i64..=4), (-5i64..=5), (1i64..=4))
                .prop_map(|(a, b, c, d)| crate::scalar::gauss(a, b, c, d))
                .prop_filter("nonzero", |z| !num_traits::Zero::is_zero(z))
        }

        fn real_coeff() -> impl Strategy<Value = Gaussian> {
            ((-5i64..=5), (1i64..=4))
                .prop_map(|(a, b)| crate::scalar::gq(a, b))
                .prop_filter("nonzero", |z| !num_traits::Zero::is_zero(z))
        }

        fn pair(n2: usize) -> impl Strategy<Value = (usize, usize)> {
            (1..=n2, 1..=n2).prop_filter("distinct", |(i, j)| i != j)
        }

        fn algebra_entry(n2: usize) -> impl Strategy<Value = FormC> {
            proptest::collection::vec((real_coeff(), pair(n2)), 0..=2).prop_map(move |terms| {
                terms.into_iter().fold(Form::zero(n2), |acc, (c, (i, j))| {
                    acc.add(
                        &Form::covector(n2, i)
                            .wedge(&Form::covector(n2, j))
                            .scale(&c),
                    )
                })
            })
        }

        fn mixed_form(n2: usize) -> impl Strategy<Value = FormC> {
            proptest::collection::vec((coeff(), 0u32..(1 << n2)), 1..=4).prop_map(move |terms| {
                terms.into_iter().fold(Form::zero(n2), |acc, (c, mask)| {
                    acc.add(&Form::monomial(n2, mask, c))
                })
            })
        }

        fn structure(n2: usize) -> impl Strategy<Value = StructureSpec> {
            let two_form = proptest::collection::vec((real_coeff(), pair(n2)), 1..=3)
                .prop_map(move |terms| {
                    terms.into_iter().fold(Form::zero(n2), |acc, (c, (i, j))| {
                        acc.add(
                            &Form::covector(n2, i)
                                .wedge(&Form::covector(n2, j))
                                .scale(&c),
                        )
                    })
                })
                .prop_filter("nonzero 2-form", |f| !f.is_zero());
            prop_oneof![
                two_form.prop_map(StructureSpec::SymplecticForm),
                mixed_form(n2)
                    .prop_filter("nonzero", |f| !f.is_zero())
                    .prop_map(StructureSpec::PureSpinor),
                proptest::collection::vec(coeff(), n2 * n2).prop_map(move |entries| {
                    let mut it = entries.into_iter();
                    StructureSpec::ComplexEndomorphism(Matrix::from_fn(n2, n2, |_, _| {
                        it.next().unwrap()
                    }))
                }),
            ]
        }

        fn model(n2: usize) -> impl Strategy<Value = (LieModel, StructureSpec)> {
            (
                proptest::collection::vec(algebra_entry(n2), n2),
                structure(n2),
            )
                .prop_map(move |(entries, spec)| (LieModel::new(n2, entries), spec))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn print_then_parse_is_the_identity_on_random_models(
                (m, spec) in prop_oneof![model(2), model(4)]
            ) {
                let printed = print_model(&m, &spec);
                let (m2, spec2) = parse_model(&printed)
                    .unwrap_or_else(|e| panic!("reparse failed on:\n{printed}\n{e}"));
                prop_assert_eq!(m.n2(), m2.n2());
                prop_assert_eq!(m.structure_terms(), m2.structure_terms());
                prop_assert_eq!(m.d_matrix(), m2.d_matrix());
                prop_assert_eq!(printed, print_model(&m2, &spec2));
            }
        }
    }

    #[test]
    fn unimodularity_detection() {
        let (kt, _) =
            parse_model("dim 4; algebra (0,0,0,12); structure symplectic omega = e14 + e23")
                .unwrap();
        assert!(kt.is_unimodular());
        // affine-type algebra d e^2 = e^{12} has tr(ad e_1) != 0
        let (aff, _) =
            parse_model("dim 2; algebra (0,12); structure symplectic omega = e12").unwrap();
        assert!(!aff.is_unimodular());
    }
}
