//! Exact LP feasibility and minimization via a dense rational simplex.
//!
//! Bland's rule guarantees termination; all pivots are exact, so returned
//! points satisfy the constraints with zero tolerance and infeasibility
//! certificates are verified before they are handed back.

use crate::linalg::{dot, zeros, QVec, Rat};
use num_traits::{One, Signed, Zero};

/// `a·x = b` rows in `equalities`, `a·x ≥ b` rows in `inequalities`.
#[derive(Debug, Clone, Default)]
pub struct LpProblem {
    pub dim: usize,
    pub equalities: Vec<(QVec, Rat)>,
    pub inequalities: Vec<(QVec, Rat)>,
}

impl LpProblem {
    pub fn new(dim: usize) -> Self {
        LpProblem {
            dim,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    pub fn add_equality(&mut self, row: QVec, rhs: Rat) {
        assert_eq!(row.len(), self.dim);
        self.equalities.push((row, rhs));
    }

    pub fn add_inequality(&mut self, row: QVec, rhs: Rat) {
        assert_eq!(row.len(), self.dim);
        self.inequalities.push((row, rhs));
    }

    /// `lo ≤ x_i ≤ hi`
    pub fn add_bounds(&mut self, i: usize, lo: Rat, hi: Rat) {
        let mut row = zeros(self.dim);
        row[i] = Rat::one();
        self.inequalities.push((row.clone(), lo));
        for x in row.iter_mut() {
            *x = -std::mem::take(x);
        }
        self.inequalities.push((row, -hi));
    }

    pub fn is_satisfied_by(&self, x: &[Rat]) -> bool {
        self.equalities.iter().all(|(a, b)| dot(a, x) == *b)
            && self.inequalities.iter().all(|(a, b)| dot(a, x) >= *b)
    }
}

/// Nonnegative multipliers on the inequality rows and free multipliers on
/// the equality rows whose combination has zero coefficients and positive
/// right-hand side — an exact proof that no feasible point exists.
#[derive(Debug, Clone)]
pub struct FarkasCertificate {
    pub eq_multipliers: Vec<Rat>,
    pub ineq_multipliers: Vec<Rat>,
}

impl FarkasCertificate {
    /// Exact validity check: multiplier combination of the rows is the zero
    /// functional with a strictly positive combined rhs.
    pub fn verify(&self, p: &LpProblem) -> bool {
        if self.ineq_multipliers.iter().any(Rat::is_negative) {
            return false;
        }
        let mut combo = zeros(p.dim);
        let mut rhs = Rat::zero();
        for (m, (a, b)) in self.eq_multipliers.iter().zip(&p.equalities) {
            for (c, ai) in combo.iter_mut().zip(a) {
                *c += m * ai;
            }
            rhs += m * b;
        }
        for (m, (a, b)) in self.ineq_multipliers.iter().zip(&p.inequalities) {
            for (c, ai) in combo.iter_mut().zip(a) {
                *c += m * ai;
            }
            rhs += m * b;
        }
        combo.iter().all(Rat::is_zero) && rhs.is_positive()
    }
}

#[derive(Debug, Clone)]
pub enum LpOutcome {
    Feasible(QVec),
    Infeasible(FarkasCertificate),
}

#[derive(Debug, Clone)]
pub enum MinimizeOutcome {
    Optimal { point: QVec, value: Rat },
    Unbounded,
    Infeasible(FarkasCertificate),
}

/// Exact feasible point or verified Farkas certificate.
pub fn lp_feasible(p: &LpProblem) -> LpOutcome {
    let mut t = Tableau::build(p);
    if let Some(cert) = t.phase1(p) {
        return LpOutcome::Infeasible(cert);
    }
    let x = t.extract(p.dim);
    debug_assert!(p.is_satisfied_by(&x));
    LpOutcome::Feasible(x)
}

/// Minimize `c·x` subject to the problem constraints.
pub fn lp_minimize(p: &LpProblem, objective: &[Rat]) -> MinimizeOutcome {
    assert_eq!(objective.len(), p.dim);
    let mut t = Tableau::build(p);
    if let Some(cert) = t.phase1(p) {
        return MinimizeOutcome::Infeasible(cert);
    }
    match t.phase2(objective) {
        Phase2::Optimal => {
            let point = t.extract(p.dim);
            debug_assert!(p.is_satisfied_by(&point));
            let value = dot(objective, &point);
            MinimizeOutcome::Optimal { point, value }
        }
        Phase2::Unbounded => MinimizeOutcome::Unbounded,
    }
}

enum Phase2 {
    Optimal,
    Unbounded,
}

/// Standard-form tableau. Variables: x⁺ (dim), x⁻ (dim), one slack per
/// inequality, one artificial per row. Row signs are flipped so every rhs
/// is nonnegative.
struct Tableau {
    dim: usize,
    n_slack: usize,
    rows: Vec<QVec>,    // m rows, each length n_total + 1 (rhs last)
    basis: Vec<usize>,  // basic variable per row
    row_sign: Vec<Rat>, // ±1 applied to original row i
    n_total: usize,     // structural + slack columns (artificials follow)
}

impl Tableau {
    fn build(p: &LpProblem) -> Tableau {
        let dim = p.dim;
        let n_slack = p.inequalities.len();
        let m = p.equalities.len() + n_slack;
        let n_struct = 2 * dim + n_slack;
        let n_total = n_struct;
        let mut rows = Vec::with_capacity(m);
        let mut row_sign = Vec::with_capacity(m);
        let mut push_row = |a: &QVec, b: &Rat, slack: Option<usize>| {
            let flip = b.is_negative();
            let s = if flip { -Rat::one() } else { Rat::one() };
            let mut row = zeros(n_struct + m + 1);
            for (j, aj) in a.iter().enumerate() {
                row[j] = &s * aj;
                row[dim + j] = -&s * aj;
            }
            if let Some(si) = slack {
                row[2 * dim + si] = -&s * Rat::one();
            }
            row[n_struct + m] = &s * b;
            rows.push(row);
            row_sign.push(s);
        };
        for (a, b) in &p.equalities {
            push_row(a, b, None);
        }
        for (si, (a, b)) in p.inequalities.iter().enumerate() {
            push_row(a, b, Some(si));
        }
        // artificial columns
        let mut basis = Vec::with_capacity(m);
        for (i, row) in rows.iter_mut().enumerate() {
            row[n_struct + i] = Rat::one();
            basis.push(n_struct + i);
        }
        Tableau {
            dim,
            n_slack,
            rows,
            basis,
            row_sign,
            n_total,
        }
    }

    fn m(&self) -> usize {
        self.rows.len()
    }

    fn rhs_col(&self) -> usize {
        self.n_total + self.m()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pv = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &pv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule over the given candidate columns against the given
    /// objective row; returns false when no entering column improves.
    fn simplex_loop(&mut self, obj: &mut QVec, cols: usize) -> bool {
        loop {
            let Some(enter) = (0..cols).find(|&j| obj[j].is_negative()) else {
                return true;
            };
            let rhs = self.rhs_col();
            let mut leave: Option<usize> = None;
            let mut best: Option<Rat> = None;
            for i in 0..self.m() {
                if self.rows[i][enter].is_positive() {
                    let ratio = &self.rows[i][rhs] / &self.rows[i][enter];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b && self.basis[i] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            let Some(r) = leave else {
                return false; // unbounded in the entering direction
            };
            // apply the pivot to the objective row as well
            self.pivot(r, enter);
            let f = obj[enter].clone();
            if !f.is_zero() {
                let prow = self.rows[r].clone();
                for (x, p) in obj.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
    }

    /// Minimize the artificial sum. None on success (feasible, artificials
    /// at zero); a verified certificate otherwise.
    fn phase1(&mut self, p: &LpProblem) -> Option<FarkasCertificate> {
        let m = self.m();
        let rhs = self.rhs_col();
        // objective row for sum of artificials: c_B = 1 on each row
        let mut obj = zeros(rhs + 1);
        for slot in obj.iter_mut().skip(self.n_total).take(m) {
            *slot = Rat::one();
        }
        for i in 0..m {
            let row = self.rows[i].clone();
            for (x, p) in obj.iter_mut().zip(&row) {
                *x -= p;
            }
        }
        let done = self.simplex_loop(&mut obj, self.n_total + m);
        debug_assert!(done, "phase 1 objective is bounded below by zero");
        let opt = -obj[rhs].clone();
        if opt.is_zero() {
            return None;
        }
        // y_i = 1 - reduced cost of artificial i
        let y: Vec<Rat> = (0..m)
            .map(|i| Rat::one() - &obj[self.n_total + i])
            .collect();
        let n_eq = p.equalities.len();
        let eq_multipliers: Vec<Rat> = (0..n_eq).map(|i| &y[i] * &self.row_sign[i]).collect();
        let ineq_multipliers: Vec<Rat> = (0..self.n_slack)
            .map(|s| &y[n_eq + s] * &self.row_sign[n_eq + s])
            .collect();
        let cert = FarkasCertificate {
            eq_multipliers,
            ineq_multipliers,
        };
        assert!(
            cert.verify(p),
            "simplex produced an invalid Farkas certificate"
        );
        Some(cert)
    }

    /// Minimize `c·x` from a feasible basis. Artificial variables are kept
    /// pinned by an infinite effective cost: they never re-enter because we
    /// only consider structural columns.
    fn phase2(&mut self, c: &[Rat]) -> Phase2 {
        let m = self.m();
        let rhs = self.rhs_col();
        // drive basic artificials out where possible; redundant rows keep
        // a zero-valued artificial which is harmless for extraction
        for i in 0..m {
            if self.basis[i] >= self.n_total {
                if let Some(j) = (0..self.n_total).find(|&j| !self.rows[i][j].is_zero()) {
                    self.pivot(i, j);
                }
            }
        }
        let mut obj = zeros(rhs + 1);
        for j in 0..self.dim {
            obj[j] = c[j].clone();
            obj[self.dim + j] = -c[j].clone();
        }
        for i in 0..m {
            let b = self.basis[i];
            if !obj[b].is_zero() {
                let f = obj[b].clone();
                let row = self.rows[i].clone();
                for (x, p) in obj.iter_mut().zip(&row) {
                    *x -= &f * p;
                }
            }
        }
        if self.simplex_loop(&mut obj, self.n_total) {
            Phase2::Optimal
        } else {
            Phase2::Unbounded
        }
    }

    fn extract(&self, dim: usize) -> QVec {
        let rhs = self.rhs_col();
        let mut x = zeros(dim);
        for (i, &b) in self.basis.iter().enumerate() {
            if b < dim {
                x[b] += &self.rows[i][rhs];
            } else if b < 2 * dim {
                x[b - dim] -= &self.rows[i][rhs];
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{qvec_from_int, rat_int};

    #[test]
    fn infeasible_x_eq_minus_one() {
        // x >= 0, x = -1
        let mut p = LpProblem::new(1);
        p.add_inequality(qvec_from_int(&[1]), rat_int(0));
        p.add_equality(qvec_from_int(&[1]), rat_int(-1));
        match lp_feasible(&p) {
            LpOutcome::Infeasible(cert) => assert!(cert.verify(&p)),
            LpOutcome::Feasible(_) => panic!("must be infeasible"),
        }
    }

    #[test]
    fn simplex_point_exact() {
        // x >= 0, sum = 1 in dim 3
        let mut p = LpProblem::new(3);
        for i in 0..3 {
            let mut row = zeros(3);
            row[i] = Rat::one();
            p.add_inequality(row, Rat::zero());
        }
        p.add_equality(qvec_from_int(&[1, 1, 1]), rat_int(1));
        match lp_feasible(&p) {
            LpOutcome::Feasible(x) => {
                assert_eq!(x.iter().cloned().sum::<Rat>(), rat_int(1));
                assert!(x.iter().all(|v| !v.is_negative()));
            }
            LpOutcome::Infeasible(_) => panic!("must be feasible"),
        }
    }

    #[test]
    fn minimize_simple() {
        // min x0 subject to x0 + x1 = 2, x >= 0  → 0 at (0, 2)
        let mut p = LpProblem::new(2);
        p.add_equality(qvec_from_int(&[1, 1]), rat_int(2));
        p.add_bounds(0, rat_int(0), rat_int(10));
        p.add_bounds(1, rat_int(0), rat_int(10));
        match lp_minimize(&p, &qvec_from_int(&[1, 0])) {
            MinimizeOutcome::Optimal { point, value } => {
                assert_eq!(value, rat_int(0));
                assert_eq!(point, qvec_from_int(&[0, 2]));
            }
            _ => panic!("must be optimal"),
        }
    }

    #[test]
    fn minimize_unbounded() {
        let mut p = LpProblem::new(1);
        p.add_inequality(qvec_from_int(&[1]), rat_int(0));
        match lp_minimize(&p, &qvec_from_int(&[-1])) {
            MinimizeOutcome::Unbounded => {}
            _ => panic!("must be unbounded"),
        }
    }

    #[test]
    fn degenerate_redundant_rows() {
        // duplicated equality rows must not confuse phase 2
        let mut p = LpProblem::new(2);
        p.add_equality(qvec_from_int(&[1, 1]), rat_int(1));
        p.add_equality(qvec_from_int(&[2, 2]), rat_int(2));
        p.add_bounds(0, rat_int(0), rat_int(1));
        p.add_bounds(1, rat_int(0), rat_int(1));
        match lp_minimize(&p, &qvec_from_int(&[0, 1])) {
            MinimizeOutcome::Optimal { point, value } => {
                assert_eq!(value, rat_int(0));
                assert_eq!(point, qvec_from_int(&[1, 0]));
            }
            _ => panic!("must be optimal"),
        }
    }
}
