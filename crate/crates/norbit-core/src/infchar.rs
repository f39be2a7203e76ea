//! The infinitesimal character attached to each classical nilpotent orbit.
//!
//! Two routes compute it. For special orbits whose dual is even, the
//! character is one half the Dynkin h of the dual orbit. For everything
//! else the case-by-case column-pairing recipe applies: transpose the
//! partition, pad, strip doubled columns at the type's straddle positions,
//! pair up what remains and read off one rational string per piece.
//! [`infchar`] routes between them; [`consistency_report`] audits the two
//! routes and the induction identities against each other.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::orbit::{
    bv_dual, dynkin_h, enumerate_orbits, inducing_presentations, is_even, is_special,
    is_stably_trivial, is_triangular, ClassicalType, Orbit, OrbitError, StablyTrivialMode,
    VeryEvenLabel,
};
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfCharError {
    /// The column pattern violated a parity constraint; the offending
    /// columns are named.
    ParityPattern {
        orbit: Orbit,
        detail: String,
    },
    /// even_dual_infchar requires a special orbit.
    NotSpecial(Orbit),
    /// even_dual_infchar requires the dual orbit to be even.
    DualNotEven(Orbit),
    RankMismatch {
        left: usize,
        right: usize,
    },
    TypeMismatch,
    Orbit(OrbitError),
}

impl fmt::Display for InfCharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfCharError::ParityPattern { orbit, detail } => {
                write!(f, "parity pattern violated for {orbit}: {detail}")
            }
            InfCharError::NotSpecial(o) => write!(f, "{o} is not special"),
            InfCharError::DualNotEven(o) => write!(f, "the dual of {o} is not even"),
            InfCharError::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            InfCharError::TypeMismatch => write!(f, "classical types differ"),
            InfCharError::Orbit(e) => write!(f, "{e}"),
        }
    }
}

impl From<OrbitError> for InfCharError {
    fn from(e: OrbitError) -> Self {
        InfCharError::Orbit(e)
    }
}

/// An infinitesimal character up to the Weyl group, stored in canonical
/// form: type A keeps the signed entries sorted descending; B, C and D
/// fold signs away (absolute values sorted descending). For D with no zero
/// entry the residual sign datum survives as `d_sign_parity` (parity of
/// the number of negative entries; for labelled very even orbits the
/// opaque convention is I = even, II = odd).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfChar {
    ty: ClassicalType,
    entries: Vec<Rat>,
    d_sign_parity: Option<bool>,
}

impl InfChar {
    /// Canonicalizes raw coordinate entries.
    pub fn from_raw(ty: ClassicalType, raw: Vec<Rat>) -> InfChar {
        Self::from_raw_labelled(ty, raw, None)
    }

    fn from_raw_labelled(
        ty: ClassicalType,
        mut raw: Vec<Rat>,
        label: Option<VeryEvenLabel>,
    ) -> InfChar {
        let zero = Rat::from_integer(0);
        let d_sign_parity = if ty == ClassicalType::D && raw.iter().all(|e| *e != zero) {
            let computed = raw.iter().filter(|e| **e < zero).count() % 2 == 1;
            Some(match label {
                Some(VeryEvenLabel::I) => false,
                Some(VeryEvenLabel::II) => true,
                None => computed,
            })
        } else {
            None
        };
        if ty != ClassicalType::A {
            for e in raw.iter_mut() {
                if *e < zero {
                    *e = -*e;
                }
            }
        }
        raw.sort_by(|a, b| b.cmp(a));
        InfChar {
            ty,
            entries: raw,
            d_sign_parity,
        }
    }

    pub fn ty(&self) -> ClassicalType {
        self.ty
    }

    /// Canonical entries, sorted descending.
    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn d_sign_parity(&self) -> Option<bool> {
        self.d_sign_parity
    }
}

impl fmt::Display for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")?;
        if self.d_sign_parity == Some(true) {
            write!(f, "-")?;
        }
        Ok(())
    }
}

/// Weyl-group equality of infinitesimal characters: signed multisets in
/// type A, absolute-value multisets in B/C, and additionally equal sign
/// parities in D when no entry vanishes.
pub fn infchar_equal(a: &InfChar, b: &InfChar) -> Result<bool, InfCharError> {
    if a.ty != b.ty {
        return Err(InfCharError::TypeMismatch);
    }
    if a.rank() != b.rank() {
        return Err(InfCharError::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(a.entries == b.entries && a.d_sign_parity == b.d_sign_parity)
}

/// Equality up to the order-two diagram automorphism of so(2n), which
/// flips the sign parity. This is the right comparison when a very even
/// orbit is involved and only its partition is known: the I/II labels are
/// opaque, and the two pair members arise from nonconjugate Levis of the
/// same shape.
pub fn infchar_equal_outer(a: &InfChar, b: &InfChar) -> Result<bool, InfCharError> {
    if a.ty != b.ty {
        return Err(InfCharError::TypeMismatch);
    }
    if a.rank() != b.rank() {
        return Err(InfCharError::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(a.entries == b.entries)
}

/// Half-sum of positive roots in coordinates: B: (n-1/2,...,1/2);
/// C: (n,...,1); D: (n-1,...,0); A: the gl(n+1) string.
pub fn rho(ty: ClassicalType, n: u32) -> InfChar {
    let entries: Vec<Rat> = match ty {
        ClassicalType::A => rho_gl(n + 1),
        ClassicalType::B => (1..=n)
            .rev()
            .map(|i| Rat::new(2 * i64::from(i) - 1, 2))
            .collect(),
        ClassicalType::C => (1..=n)
            .rev()
            .map(|i| Rat::from_integer(i64::from(i)))
            .collect(),
        ClassicalType::D => (0..n)
            .rev()
            .map(|i| Rat::from_integer(i64::from(i)))
            .collect(),
    };
    InfChar::from_raw(ty, entries)
}

/// The string ((k-1)/2, (k-3)/2, ..., -(k-1)/2).
pub fn rho_gl(k: u32) -> Vec<Rat> {
    let k = i64::from(k);
    (0..k).map(|i| Rat::new(k - 1 - 2 * i, 2)).collect()
}

/// Descending half-integer string a/2, a/2 - 1, ..., -(b-2)/2; empty when
/// a + b < 2. This is the displayed contribution of a column pair (a, b).
fn pair_string(a: u32, b: u32) -> Vec<Rat> {
    let hi = Rat::new(i64::from(a), 2);
    let lo = Rat::new(-(i64::from(b) - 2), 2);
    descending(hi, lo)
}

fn descending(hi: Rat, lo: Rat) -> Vec<Rat> {
    let one = Rat::from_integer(1);
    let mut out = Vec::new();
    let mut v = hi;
    while v >= lo {
        out.push(v);
        v -= one;
    }
    out
}

/// One piece of the recipe trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TracePiece {
    /// Doubled columns stripped at a straddle position.
    Removed { value: u32, contribution: Vec<Rat> },
    /// Leading singleton (type B).
    HeadSingleton { value: u32, contribution: Vec<Rat> },
    /// Trailing singleton (type C).
    TailSingleton { value: u32, contribution: Vec<Rat> },
    /// First-with-last wrap pair (type D).
    Wrap {
        a: u32,
        b: u32,
        contribution: Vec<Rat>,
    },
    /// An interior (or type-C leading) pair.
    Pair {
        a: u32,
        b: u32,
        used_rho_gl: bool,
        contribution: Vec<Rat>,
    },
    /// Type A column.
    Column { value: u32, contribution: Vec<Rat> },
}

/// Full pairing trace: padding, removals, pattern, contributions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecipeTrace {
    pub columns: Vec<u32>,
    pub padded: Vec<u32>,
    pub pieces: Vec<TracePiece>,
}

/// Controls the contribution of an equal column pair (m, m) left in the
/// pattern. `Consistent` (the default) picks between the displayed string
/// and the rho_gl string by the parity of m, so that the recipe matches
/// the even-dual rule and the induction identities; `Literal` always uses
/// the displayed formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairingMode {
    #[default]
    Consistent,
    Literal,
}

/// Which rule produced an infinitesimal character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfCharRule {
    EvenDual,
    Recipe,
}

impl fmt::Display for InfCharRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfCharRule::EvenDual => write!(f, "even-dual"),
            InfCharRule::Recipe => write!(f, "recipe"),
        }
    }
}

/// Contribution of an equal pattern pair (m, m) under `Consistent`
/// pairing. Each type keeps its own integrality: B pairs contribute
/// half-integer strings, C pairs integer strings, D interior pairs always
/// the rho_gl string.
fn equal_pair_contribution(ty: ClassicalType, m: u32, mode: PairingMode) -> (bool, Vec<Rat>) {
    let displayed = || pair_string(m, m);
    let rho = || rho_gl(m);
    match mode {
        PairingMode::Literal => (false, displayed()),
        PairingMode::Consistent => match ty {
            ClassicalType::B => {
                if m % 2 == 1 {
                    (false, displayed())
                } else {
                    (true, rho())
                }
            }
            ClassicalType::C => {
                if m % 2 == 1 {
                    (true, rho())
                } else {
                    (false, displayed())
                }
            }
            ClassicalType::D => (true, rho()),
            ClassicalType::A => (true, rho()),
        },
    }
}

/// The case-by-case column-pairing recipe, with the full trace.
pub fn recipe_infchar_traced(
    o: &Orbit,
    mode: PairingMode,
) -> Result<(InfChar, RecipeTrace), InfCharError> {
    let columns: Vec<u32> = o.partition().transpose().parts().to_vec();
    let ty = o.ty();

    if ty == ClassicalType::A {
        // one rho_gl string per column of the dual partition
        let pieces: Vec<TracePiece> = columns
            .iter()
            .map(|&c| TracePiece::Column {
                value: c,
                contribution: rho_gl(c),
            })
            .collect();
        let entries = pieces
            .iter()
            .flat_map(|p| match p {
                TracePiece::Column { contribution, .. } => contribution.clone(),
                _ => Vec::new(),
            })
            .collect();
        let trace = RecipeTrace {
            padded: columns.clone(),
            columns,
            pieces,
        };
        return Ok((InfChar::from_raw(ty, entries), trace));
    }

    // Pad with one trailing zero: to odd length for B and C, even for D.
    let mut padded = columns.clone();
    let want_odd = matches!(ty, ClassicalType::B | ClassicalType::C);
    if (padded.len() % 2 == 1) != want_odd {
        padded.push(0);
    }

    let mut pieces: Vec<TracePiece> = Vec::new();
    let mut work = padded.clone();

    // Straddle removal, iterated to a fixed point. Eligible index pairs are
    // (0,1),(2,3),... for B and D, (1,2),(3,4),... for C.
    let start = usize::from(ty == ClassicalType::C);
    loop {
        let mut removed = false;
        let mut j = start;
        while j + 1 < work.len() {
            if work[j] == work[j + 1] && work[j] > 0 {
                let value = work[j];
                pieces.push(TracePiece::Removed {
                    value,
                    contribution: rho_gl(value),
                });
                work.drain(j..=j + 1);
                removed = true;
                break;
            }
            j += 2;
        }
        if !removed {
            break;
        }
    }

    let parity_err = |detail: String| InfCharError::ParityPattern {
        orbit: o.clone(),
        detail,
    };

    // Pattern the remaining columns.
    match ty {
        ClassicalType::B => {
            let head = work[0];
            if head.is_multiple_of(2) {
                return Err(parity_err(format!("leading column {head} is even")));
            }
            pieces.push(TracePiece::HeadSingleton {
                value: head,
                contribution: descending(Rat::new(i64::from(head) - 2, 2), Rat::new(1, 2)),
            });
            for pair in work[1..].chunks(2) {
                let (a, b) = (pair[0], pair[1]);
                if a % 2 != b % 2 {
                    return Err(parity_err(format!("pair ({a},{b}) has unlike parity")));
                }
                let (used_rho_gl, contribution) = if a == b {
                    equal_pair_contribution(ty, a, mode)
                } else {
                    (false, pair_string(a, b))
                };
                pieces.push(TracePiece::Pair {
                    a,
                    b,
                    used_rho_gl,
                    contribution,
                });
            }
        }
        ClassicalType::C => {
            let tail = *work.last().expect("padding keeps the list nonempty");
            if tail % 2 == 1 {
                return Err(parity_err(format!("trailing column {tail} is odd")));
            }
            for pair in work[..work.len() - 1].chunks(2) {
                let (a, b) = (pair[0], pair[1]);
                if a % 2 != b % 2 {
                    return Err(parity_err(format!("pair ({a},{b}) has unlike parity")));
                }
                let (used_rho_gl, contribution) = if a == b {
                    equal_pair_contribution(ty, a, mode)
                } else {
                    (false, pair_string(a, b))
                };
                pieces.push(TracePiece::Pair {
                    a,
                    b,
                    used_rho_gl,
                    contribution,
                });
            }
            pieces.push(TracePiece::TailSingleton {
                value: tail,
                contribution: descending(Rat::new(i64::from(tail), 2), Rat::from_integer(1)),
            });
        }
        ClassicalType::D => {
            if !work.is_empty() {
                let a = work[0];
                let b = *work.last().unwrap();
                if a % 2 == 1 || b % 2 == 1 {
                    return Err(parity_err(format!("wrap pair ({a},{b}) must be even")));
                }
                pieces.push(TracePiece::Wrap {
                    a,
                    b,
                    contribution: descending(
                        Rat::new(i64::from(a) - 2, 2),
                        Rat::new(-i64::from(b), 2),
                    ),
                });
                for pair in work[1..work.len() - 1].chunks(2) {
                    let (a, b) = (pair[0], pair[1]);
                    if a % 2 != b % 2 {
                        return Err(parity_err(format!("pair ({a},{b}) has unlike parity")));
                    }
                    let (used_rho_gl, contribution) = if a == b {
                        equal_pair_contribution(ty, a, mode)
                    } else {
                        (false, pair_string(a, b))
                    };
                    pieces.push(TracePiece::Pair {
                        a,
                        b,
                        used_rho_gl,
                        contribution,
                    });
                }
            }
        }
        ClassicalType::A => unreachable!(),
    }

    let mut entries: Vec<Rat> = Vec::new();
    for p in &pieces {
        let c = match p {
            TracePiece::Removed { contribution, .. }
            | TracePiece::HeadSingleton { contribution, .. }
            | TracePiece::TailSingleton { contribution, .. }
            | TracePiece::Wrap { contribution, .. }
            | TracePiece::Pair { contribution, .. }
            | TracePiece::Column { contribution, .. } => contribution,
        };
        entries.extend_from_slice(c);
    }
    debug_assert_eq!(entries.len(), o.rank() as usize, "entry count is the rank");

    let trace = RecipeTrace {
        columns,
        padded,
        pieces,
    };
    Ok((InfChar::from_raw_labelled(ty, entries, o.label()), trace))
}

/// The column-pairing recipe without the trace.
pub fn recipe_infchar(o: &Orbit, mode: PairingMode) -> Result<InfChar, InfCharError> {
    recipe_infchar_traced(o, mode).map(|(ic, _)| ic)
}

/// Half the Dynkin h of the dual orbit. Defined for special orbits whose
/// dual is even; the error names the failed condition.
pub fn even_dual_infchar(o: &Orbit) -> Result<InfChar, InfCharError> {
    if !is_special(o) {
        return Err(InfCharError::NotSpecial(o.clone()));
    }
    let dual = bv_dual(o);
    if !is_even(&dual) {
        return Err(InfCharError::DualNotEven(o.clone()));
    }
    let entries: Vec<Rat> = dynkin_h(&dual)
        .into_iter()
        .map(|v| Rat::new(v, 2))
        .collect();
    Ok(InfChar::from_raw_labelled(o.ty(), entries, o.label()))
}

/// The infinitesimal character of an orbit: the even-dual rule when its
/// precondition holds, the pairing recipe otherwise.
pub fn infchar(o: &Orbit) -> Result<(InfChar, InfCharRule), InfCharError> {
    match even_dual_infchar(o) {
        Ok(ic) => Ok((ic, InfCharRule::EvenDual)),
        Err(InfCharError::NotSpecial(_)) | Err(InfCharError::DualNotEven(_)) => {
            recipe_infchar(o, PairingMode::Consistent).map(|ic| (ic, InfCharRule::Recipe))
        }
        Err(e) => Err(e),
    }
}

/// Concatenation rho_gl(k_1) u ... u rho_gl(k_r) u lambda, canonicalized.
pub fn concat_with_rho_gl(ty: ClassicalType, blocks: &[u32], lambda: &InfChar) -> InfChar {
    let mut entries: Vec<Rat> = Vec::new();
    for &k in blocks {
        entries.extend(rho_gl(k));
    }
    entries.extend_from_slice(lambda.entries());
    InfChar::from_raw(ty, entries)
}

/// Per-orbit audit line of [`consistency_report`].
#[derive(Debug, Clone)]
pub struct OrbitAudit {
    pub orbit: Orbit,
    pub lambda: Option<InfChar>,
    pub rule: Option<InfCharRule>,
    pub recipe_error: Option<String>,
    pub special: bool,
    pub even_dual_defined: bool,
    pub stably_trivial_literal: bool,
    pub stably_trivial_parallel: bool,
    pub triangular: bool,
}

/// Result of auditing every orbit of one algebra: recipe vs even-dual rule
/// where both are defined, and the induction identity
/// lambda(O) = rho_gl(k) u lambda(base) for every trivial-gl presentation
/// found. Mismatching presentations outside the recipe's own pair
/// structure are recorded as notes, never silently reconciled.
#[derive(Debug, Clone)]
pub struct ConsistencyReport {
    pub ty: ClassicalType,
    pub rank: u32,
    pub orbits: Vec<OrbitAudit>,
    pub discrepancies: Vec<String>,
    pub notes: Vec<String>,
}

impl ConsistencyReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "consistency {}{}: {} orbits, {} discrepancies, {} notes",
            self.ty,
            self.rank,
            self.orbits.len(),
            self.discrepancies.len(),
            self.notes.len()
        )?;
        for d in &self.discrepancies {
            writeln!(f, "  DISCREPANCY {d}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Does the recipe of `o` strip or rho_gl-pair a doubled column (k, k)?
/// Exactly then the induction identity over the gl(k) presentation is part
/// of the recipe's own structure and must hold.
fn recipe_consumes_pair(trace: &RecipeTrace, k: u32) -> bool {
    trace.pieces.iter().any(|p| match p {
        TracePiece::Removed { value, .. } => *value == k,
        TracePiece::Pair {
            a, b, used_rho_gl, ..
        } => *a == k && *b == k && *used_rho_gl,
        _ => false,
    })
}

fn multiset_minus_pair(cols: &[u32], k: u32) -> Option<Vec<u32>> {
    let mut cols = cols.to_vec();
    for _ in 0..2 {
        let i = cols.iter().position(|&c| c == k)?;
        cols.remove(i);
    }
    Some(cols)
}

/// Audits every orbit of the rank-`n` type-`ty` algebra.
pub fn consistency_report(ty: ClassicalType, rank: u32) -> Result<ConsistencyReport, InfCharError> {
    let mut report = ConsistencyReport {
        ty,
        rank,
        orbits: Vec::new(),
        discrepancies: Vec::new(),
        notes: Vec::new(),
    };
    if ty == ClassicalType::D {
        report.notes.push(String::from(
            "type D stably-trivial criterion is vacuous in paper-literal mode; \
             parity-parallel values are reported alongside",
        ));
    }

    for o in enumerate_orbits(ty, rank) {
        let traced = recipe_infchar_traced(&o, PairingMode::Consistent);
        let special = is_special(&o);
        let even_dual = even_dual_infchar(&o);
        let even_dual_defined = even_dual.is_ok();

        let (lambda, rule, recipe_error) = match (&even_dual, &traced) {
            (Ok(ic), _) => (Some(ic.clone()), Some(InfCharRule::EvenDual), None),
            (Err(_), Ok((ic, _))) => (Some(ic.clone()), Some(InfCharRule::Recipe), None),
            (Err(_), Err(e)) => (None, None, Some(format!("{e}"))),
        };

        // Route agreement where both are defined.
        if let (Ok(dual_ic), Ok((recipe_ic, _))) = (&even_dual, &traced) {
            if !infchar_equal(dual_ic, recipe_ic)? {
                report
                    .discrepancies
                    .push(format!("{o}: recipe {recipe_ic} != even-dual {dual_ic}"));
            }
        }

        // Induction identity over every trivial-gl presentation found.
        if let Ok((recipe_ic, trace)) = &traced {
            let lambda_o = lambda.as_ref().unwrap_or(recipe_ic);
            for pres in inducing_presentations(&o, rank)? {
                if !pres.is_trivial_gl() {
                    continue;
                }
                let base_lambda = match infchar(&pres.base) {
                    Ok((ic, _)) => ic,
                    Err(e) => {
                        report
                            .notes
                            .push(format!("{o}: base {} has no character: {e}", pres.base));
                        continue;
                    }
                };
                let expected = concat_with_rho_gl(ty, &[pres.block], &base_lambda);
                // Labels are opaque, so identities touching a very even
                // orbit hold only up to the diagram automorphism.
                let up_to_outer = o.is_very_even() || pres.base.is_very_even();
                let matches = if up_to_outer {
                    infchar_equal_outer(lambda_o, &expected)?
                } else {
                    infchar_equal(lambda_o, &expected)?
                };
                if matches {
                    continue;
                }
                // The identity is forced only when the presentation matches
                // the recipe's own pair structure.
                let base_cols = pres.base.partition().transpose().parts().to_vec();
                let structural = multiset_minus_pair(&trace.columns, pres.block)
                    .map(|rest| rest == base_cols)
                    .unwrap_or(false)
                    && recipe_consumes_pair(trace, pres.block);
                let line = format!(
                    "{o}: lambda {lambda_o} != rho_gl({}) u lambda({}) = {expected}",
                    pres.block, pres.base
                );
                if structural {
                    report.discrepancies.push(line);
                } else {
                    report
                        .notes
                        .push(format!("non-structural presentation: {line}"));
                }
            }
        }

        report.orbits.push(OrbitAudit {
            special,
            even_dual_defined,
            stably_trivial_literal: is_stably_trivial(&o, StablyTrivialMode::PaperLiteral),
            stably_trivial_parallel: is_stably_trivial(&o, StablyTrivialMode::ParityParallel),
            triangular: is_triangular(&o),
            lambda,
            rule,
            recipe_error,
            orbit: o,
        });
    }
    Ok(report)
}
