//! Named end-to-end checks that recompute the worked examples this
//! library is built around: embeddings of the binomial and Catalan
//! triangles, weighted two- and three-term cycles, the central binomial
//! family, and the constant-tail recurrence families — each compared
//! against independently derived values.

use serde::Serialize;

use crate::cfrac::{contract_even, contract_odd, JFraction, SFraction};
use crate::embedding;
use crate::epseq::EpSeq;
use crate::error::{Error, Result};
use crate::fps::Series;
use crate::gfparse;
use crate::orthopoly::{InterleavedFamily, Recurrence};
use crate::prodmat::{production_of, BidiagonalSpec, ProductionMatrix};
use crate::rational::{int, rat, rat_to_string, Rat};
use crate::riordan::RiordanArray;
use crate::triangle::Triangle;

/// One named comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// The result of running every check.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.pass {
                out.push_str(&format!("PASS {}\n", c.name));
            } else {
                out.push_str(&format!(
                    "FAIL {}\n  expected: {}\n  actual:   {}\n",
                    c.name, c.expected, c.actual
                ));
            }
        }
        out.push_str(&format!(
            "{} checks: {} passed, {} failed\n",
            self.total, self.passed, self.failed
        ));
        out
    }
}

struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    fn add<F>(&mut self, name: &str, f: F)
    where
        F: FnOnce() -> Result<(String, String)>,
    {
        let (expected, actual) = match f() {
            Ok(pair) => pair,
            Err(e) => ("computed without error".into(), format!("error: {e}")),
        };
        self.checks.push(Check {
            name: name.to_string(),
            pass: expected == actual,
            expected,
            actual,
        });
    }
}

// ---- small formatting helpers ------------------------------------------

fn tri(t: &Triangle) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(rat_to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn lit(rows: &[&[i64]]) -> String {
    tri(&Triangle::from_ints(rows))
}

fn pm(p: &ProductionMatrix) -> String {
    let rows: Vec<String> = p
        .rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(rat_to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn pm_lit(rows: &[&[i64]]) -> Result<String> {
    let rows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
        .collect();
    Ok(pm(&ProductionMatrix::new(rows)?))
}

fn ser(s: &Series, n: usize) -> String {
    let cells: Vec<String> = s.coeffs().iter().take(n).map(rat_to_string).collect();
    cells.join(", ")
}

fn ser_lit(terms: &[i64]) -> String {
    let cells: Vec<String> = terms.iter().map(|&t| rat_to_string(&rat(t, 1))).collect();
    cells.join(", ")
}

fn eps(pre: &[i64], period: &[i64]) -> Result<EpSeq<Rat>> {
    EpSeq::new(
        pre.iter().map(|&v| rat(v, 1)).collect(),
        period.iter().map(|&v| rat(v, 1)).collect(),
    )
}

fn ev(text: &str, order: usize) -> Result<Series> {
    gfparse::eval(&gfparse::parse(text)?, order)
}

fn pair(g: &str, f: &str, order: usize) -> Result<RiordanArray> {
    RiordanArray::new(ev(g, order)?, ev(f, order)?)
}

fn binom(n: i64, k: i64) -> Rat {
    if k < 0 || k > n {
        return rat(0, 1);
    }
    let mut num = int(1);
    let mut den = int(1);
    for i in 0..k {
        num *= int(n - i);
        den *= int(i + 1);
    }
    Rat::new(num, den)
}

/// Even-position sub-triangle: `out[n][k] = t[n+k][2k]`.
fn even_part(t: &Triangle, rows: usize) -> Result<Triangle> {
    let mut out = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            row.push(t.entry(n + k, 2 * k)?);
        }
        out.push(row);
    }
    Triangle::new(out)
}

/// Odd-position sub-triangle: `out[n][k] = t[n+k+1][2k+1]`.
fn odd_part(t: &Triangle, rows: usize) -> Result<Triangle> {
    let mut out = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            row.push(t.entry(n + k + 1, 2 * k + 1)?);
        }
        out.push(row);
    }
    Triangle::new(out)
}

// ---- the checks ---------------------------------------------------------

/// Run every check at the given working order (values below 16 are
/// raised to 16 so each check has the precision it needs).
pub fn run_all(order: usize) -> Report {
    let order = order.max(16);
    let mut b = Builder { checks: Vec::new() };

    binomial_checks(&mut b, order);
    catalan_checks(&mut b, order);
    two_weight_checks(&mut b, order);
    central_checks(&mut b, order);
    three_weight_checks(&mut b, order);
    shift_family_checks(&mut b, order);

    let passed = b.checks.iter().filter(|c| c.pass).count();
    Report {
        total: b.checks.len(),
        passed,
        failed: b.checks.len() - passed,
        checks: b.checks,
    }
}

fn binomial_checks(b: &mut Builder, order: usize) {
    b.add("binomial.rows", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let mut want = Vec::new();
        for n in 0..6i64 {
            want.push((0..=n).map(|k| binom(n, k)).collect());
        }
        Ok((tri(&Triangle::new(want)?), tri(&r.triangle(6)?)))
    });
    b.add("binomial.even.entries", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let d = embedding::decompose(&r)?;
        let mut want = Vec::new();
        for n in 0..6i64 {
            want.push((0..=n).map(|k| binom(n + k, 2 * k)).collect());
        }
        Ok((tri(&Triangle::new(want)?), tri(&d.a.triangle(6)?)))
    });
    b.add("binomial.odd.entries", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let d = embedding::decompose(&r)?;
        let mut want = Vec::new();
        for n in 0..6i64 {
            want.push((0..=n).map(|k| binom(n + k + 1, 2 * k + 1)).collect());
        }
        Ok((tri(&Triangle::new(want)?), tri(&d.b.triangle(6)?)))
    });
    b.add("binomial.even.pair", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let d = embedding::decompose(&r)?;
        let direct = pair("1/(1-x)", "x/(1-x)^2", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&d.a.triangle(6)?)))
    });
    b.add("binomial.odd.pair", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let d = embedding::decompose(&r)?;
        let direct = pair("1/(1-x)^2", "x/(1-x)^2", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&d.b.triangle(6)?)))
    });
    b.add("binomial.interleave.roundtrip", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let d = embedding::decompose(&r)?;
        let back = embedding::interleave(&d.a.triangle(6)?, &d.b.triangle(6)?)?;
        Ok((tri(&r.triangle(6)?), tri(&back)))
    });
    b.add("binomial.odd.from.even.factor", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let d = embedding::decompose(&r)?;
        let factor = embedding::odd_from_even_factor(&r)?;
        let product = factor.multiply(&d.a)?;
        Ok((tri(&d.b.triangle(6)?), tri(&product.triangle(6)?)))
    });
    b.add("binomial.production.bidiagonal", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let expected = pm_lit(&[
            &[1, 1, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 0, 1],
        ])?;
        let got = production_of(&r.triangle(7)?)?;
        Ok((expected, pm(&got)))
    });
    b.add("binomial.cascade.depth.two", || {
        let r = pair("1/(1-x)", "x/(1-x)", order)?;
        let nodes = embedding::cascade(&r, 2)?;
        let deep = &nodes[1].a;
        let mut want = Vec::new();
        for n in 0..5i64 {
            want.push((0..=n).map(|k| binom(n + 3 * k, 4 * k)).collect());
        }
        Ok((tri(&Triangle::new(want)?), tri(&deep.triangle(5)?)))
    });
}

fn catalan_checks(b: &mut Builder, order: usize) {
    let frozen_rows: &[&[i64]] = &[
        &[1],
        &[1, 1],
        &[2, 2, 1],
        &[5, 5, 3, 1],
        &[14, 14, 9, 4, 1],
        &[42, 42, 28, 14, 5, 1],
    ];
    let frozen_inverse: &[&[i64]] = &[
        &[1],
        &[-1, 1],
        &[0, -2, 1],
        &[0, 1, -3, 1],
        &[0, 0, 3, -4, 1],
        &[0, 0, -1, 6, -5, 1],
    ];
    b.add("catalan.rows", || {
        let r = pair("c", "x*c", order)?;
        Ok((lit(frozen_rows), tri(&r.triangle(6)?)))
    });
    b.add("catalan.inverse.rows", || {
        let r = pair("c", "x*c", order)?;
        Ok((lit(frozen_inverse), tri(&r.inverse()?.triangle(6)?)))
    });
    b.add("catalan.inverse.pair", || {
        let direct = pair("1-x", "x*(1-x)", order)?;
        Ok((lit(frozen_inverse), tri(&direct.triangle(6)?)))
    });
    b.add("catalan.even.pair", || {
        let r = pair("c", "x*c", order)?;
        let d = embedding::decompose(&r)?;
        let direct = pair("c", "x*c^2", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&d.a.triangle(6)?)))
    });
    b.add("catalan.odd.pair", || {
        let r = pair("c", "x*c", order)?;
        let d = embedding::decompose(&r)?;
        let direct = pair("c^2", "x*c^2", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&d.b.triangle(6)?)))
    });
    b.add("catalan.even.inverse.pair", || {
        let r = pair("c", "x*c", order)?;
        let d = embedding::decompose(&r)?;
        let direct = pair("1/(1+x)", "x/(1+x)^2", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&d.a.inverse()?.triangle(6)?)))
    });
    b.add("catalan.odd.inverse.pair", || {
        let r = pair("c", "x*c", order)?;
        let d = embedding::decompose(&r)?;
        let direct = pair("1/(1+x)^2", "x/(1+x)^2", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&d.b.inverse()?.triangle(6)?)))
    });
    b.add("catalan.even.moment.recurrence", || {
        // P(n) = (x-2)P(n-1) - P(n-2), P(1) = x - 1: moments are the
        // even sub-array of the Catalan pair.
        let rec = Recurrence::new(eps(&[1], &[2])?, eps(&[], &[1])?, rat(-1, 1));
        let r = pair("c", "x*c", order)?;
        let d = embedding::decompose(&r)?;
        Ok((tri(&d.a.triangle(6)?), tri(&rec.moment_matrix(6)?)))
    });
    b.add("catalan.odd.moment.recurrence", || {
        let rec = Recurrence::new(eps(&[], &[2])?, eps(&[], &[1])?, rat(-2, 1));
        let r = pair("c", "x*c", order)?;
        let d = embedding::decompose(&r)?;
        Ok((tri(&d.b.triangle(6)?), tri(&rec.moment_matrix(6)?)))
    });
    b.add("catalan.even.production.tridiagonal", || {
        let r = pair("c", "x*c", order)?;
        let d = embedding::decompose(&r)?;
        let j = JFraction::new(eps(&[1], &[2])?, eps(&[], &[1])?);
        let got = production_of(&d.a.triangle(7)?)?;
        Ok((pm(&j.tridiagonal(6)?), pm(&got)))
    });
    b.add("catalan.self.convolution", || {
        Ok((ser(&ev("c", 8)?, 8), ser(&ev("1 + x*c^2", 8)?, 8)))
    });
}

fn two_weight_checks(b: &mut Builder, order: usize) {
    let frozen_inverse_lower: &[&[i64]] = &[
        &[1],
        &[2, 1],
        &[6, 3, 1],
        &[12, 6, 2, 1],
        &[36, 18, 6, 3, 1],
        &[72, 36, 12, 6, 2, 1],
    ];
    let frozen_array: &[&[i64]] = &[
        &[1],
        &[2, 1],
        &[10, 5, 1],
        &[62, 31, 7, 1],
        &[430, 215, 51, 10, 1],
        &[3194, 1597, 389, 87, 12, 1],
    ];
    b.add("two.weight.inverse.rows", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        Ok((lit(frozen_inverse_lower), tri(&spec.inverse_lower(6))))
    });
    b.add("two.weight.inverse.columns", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        let inv = spec.inverse_lower(6);
        let col0: Vec<Rat> = (0..6).map(|i| inv.entry(i, 0).unwrap()).collect();
        let col1: Vec<Rat> = (0..6).map(|i| inv.entry(i, 1).unwrap()).collect();
        let expected = format!(
            "{} | {}",
            ser(&ev("(1+2*x)/(1-6*x^2)", 6)?, 6),
            ser(&ev("x*(1+3*x)/(1-6*x^2)", 6)?, 6)
        );
        let actual = format!(
            "{} | {}",
            ser(&Series::from_coeffs(col0), 6),
            ser(&Series::from_coeffs(col1), 6)
        );
        Ok((expected, actual))
    });
    b.add("two.weight.array.rows", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        Ok((lit(frozen_array), tri(&spec.array(6)?)))
    });
    b.add("two.weight.moments.sfraction", || {
        let s = SFraction::from_cycle(&[2, 3])?;
        Ok((ser_lit(&[1, 2, 10, 62, 430, 3194]), ser(&s.series(6), 6)))
    });
    b.add("two.weight.array.first.column", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        let arr = spec.array(6)?;
        let col: Vec<Rat> = (0..6).map(|i| arr.entry(i, 0).unwrap()).collect();
        let s = SFraction::from_cycle(&[2, 3])?;
        Ok((ser(&s.series(6), 6), ser(&Series::from_coeffs(col), 6)))
    });
    b.add("two.weight.production.roundtrip", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        let direct = spec.production(6)?;
        let recovered = production_of(&spec.array(7)?)?;
        Ok((pm(&direct), pm(&recovered)))
    });
    b.add("two.weight.production.not.riordan", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        Ok((
            "riordan-form: false".into(),
            format!(
                "riordan-form: {}",
                spec.production(6)?.is_riordan_production()
            ),
        ))
    });
    b.add("two.weight.even.pair", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        let even = even_part(&spec.array(12)?, 6)?;
        let direct = pair("1/(1+2*x)", "x/(1+5*x+6*x^2)", order)?.inverse()?;
        Ok((tri(&direct.triangle(6)?), tri(&even)))
    });
    b.add("two.weight.odd.pair", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        let odd = odd_part(&spec.array(12)?, 6)?;
        let direct = pair("1/(1+5*x+6*x^2)", "x/(1+5*x+6*x^2)", order)?.inverse()?;
        Ok((tri(&direct.triangle(6)?), tri(&odd)))
    });
    b.add("two.weight.denominator.factors", || {
        Ok((
            ser(&ev("1+5*x+6*x^2", 6)?, 6),
            ser(&ev("(1+2*x)*(1+3*x)", 6)?, 6),
        ))
    });
    b.add("two.weight.interleave.roundtrip", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3])?;
        let arr = spec.array(12)?;
        let back = embedding::interleave(&even_part(&arr, 6)?, &odd_part(&arr, 6)?)?;
        Ok((lit(frozen_array), tri(&back)))
    });
}

fn central_checks(b: &mut Builder, order: usize) {
    let frozen_even: &[&[i64]] = &[
        &[1],
        &[2, 1],
        &[6, 6, 1],
        &[20, 30, 10, 1],
        &[70, 140, 70, 14, 1],
        &[252, 630, 420, 126, 18, 1],
    ];
    let frozen_parent: &[&[i64]] = &[
        &[1],
        &[2, 1],
        &[6, 4, 1],
        &[20, 16, 6, 1],
        &[70, 64, 30, 8, 1],
        &[252, 256, 140, 48, 10, 1],
    ];
    b.add("central.even.rows", || {
        let a = pair("1/sqrt(1-4*x)", "x/(1-4*x)", order)?;
        Ok((lit(frozen_even), tri(&a.triangle(6)?)))
    });
    b.add("central.parent.rows", || {
        let r = pair("1/sqrt(1-4*x)", "x/sqrt(1-4*x)", order)?;
        Ok((lit(frozen_parent), tri(&r.triangle(6)?)))
    });
    b.add("central.embed.recovers.parent", || {
        let a = pair("1/sqrt(1-4*x)", "x/(1-4*x)", order)?;
        let parent = embedding::embed(&a)?;
        Ok((lit(frozen_parent), tri(&parent.triangle(6)?)))
    });
    b.add("central.decompose.roundtrip", || {
        let r = pair("1/sqrt(1-4*x)", "x/sqrt(1-4*x)", order)?;
        let d = embedding::decompose(&r)?;
        Ok((lit(frozen_even), tri(&d.a.triangle(6)?)))
    });
    b.add("embed.rejects.non.square.kernel", || {
        let a = pair("1", "x*(1+x)", order)?;
        let expected = "not embeddable: coefficient 1/2 at index 1".to_string();
        let actual = match embedding::embed(&a) {
            Ok(_) => "embedded successfully".to_string(),
            Err(Error::NotEmbeddable {
                index, coefficient, ..
            }) => format!("not embeddable: coefficient {coefficient} at index {index}"),
            Err(e) => format!("error: {e}"),
        };
        Ok((expected, actual))
    });
}

fn three_weight_checks(b: &mut Builder, order: usize) {
    let frozen_even_moments: &[&[i64]] = &[
        &[1],
        &[2, 1],
        &[10, 10, 1],
        &[80, 100, 15, 1],
        &[760, 1030, 190, 22, 1],
        &[7700, 10900, 2310, 350, 30, 1],
    ];
    let frozen_array: &[&[i64]] = &[
        &[1],
        &[2, 1],
        &[10, 5, 1],
        &[80, 40, 10, 1],
        &[760, 380, 100, 12, 1],
        &[7700, 3850, 1030, 130, 15, 1],
    ];
    let frozen_odd_moments: &[&[i64]] = &[
        &[1],
        &[5, 1],
        &[40, 12, 1],
        &[380, 130, 20, 1],
        &[3850, 1410, 300, 25, 1],
        &[40400, 15520, 4060, 440, 32, 1],
    ];
    b.add("three.weight.even.contraction", || {
        let s = SFraction::from_cycle(&[2, 3, 5])?;
        let expected = JFraction::new(eps(&[2], &[8, 5, 7])?, eps(&[], &[6, 10, 15])?);
        Ok((format!("{expected}"), format!("{}", contract_even(&s))))
    });
    b.add("three.weight.odd.contraction", || {
        let s = SFraction::from_cycle(&[2, 3, 5])?;
        let expected = JFraction::new(eps(&[], &[5, 7, 8])?, eps(&[], &[15, 6, 10])?);
        Ok((format!("{expected}"), format!("{}", contract_odd(&s))))
    });
    b.add("three.weight.even.series.match", || {
        let s = SFraction::from_cycle(&[2, 3, 5])?;
        Ok((
            ser(&s.series(10), 10),
            ser(&contract_even(&s).series(10), 10),
        ))
    });
    b.add("three.weight.even.moments", || {
        let s = SFraction::from_cycle(&[2, 3, 5])?;
        let j = contract_even(&s);
        Ok((
            lit(frozen_even_moments),
            tri(&j.tridiagonal(6)?.generate(6)?),
        ))
    });
    b.add("three.weight.odd.moments", || {
        let s = SFraction::from_cycle(&[2, 3, 5])?;
        let j = contract_odd(&s);
        Ok((
            lit(frozen_odd_moments),
            tri(&j.tridiagonal(6)?.generate(6)?),
        ))
    });
    b.add("three.weight.array.rows", || {
        let spec = BidiagonalSpec::from_cycle(&[2, 3, 5])?;
        Ok((lit(frozen_array), tri(&spec.array(6)?)))
    });
    b.add("three.weight.interleave.roundtrip", || {
        let back = embedding::interleave(
            &Triangle::from_ints(frozen_even_moments),
            &Triangle::from_ints(frozen_odd_moments),
        )?;
        Ok((lit(frozen_array), tri(&back)))
    });
    b.add("three.weight.interleaved.moments", || {
        let s = SFraction::from_cycle(&[2, 3, 5])?;
        let p = Recurrence::jacobi(&contract_even(&s));
        let q = Recurrence::jacobi(&contract_odd(&s));
        let fam = InterleavedFamily::new(p, q);
        Ok((lit(frozen_array), tri(&fam.moment_matrix(6)?)))
    });
    b.add("three.weight.even.pattern", || {
        // With weights cycling a, b, g the even contraction has diagonal
        // a, b+g, a+b, a+g (repeating) and sub-diagonal ab, ag, bg.
        let s = SFraction::from_cycle(&[1, 2, 3])?;
        let expected = JFraction::new(eps(&[1], &[5, 3, 4])?, eps(&[], &[2, 3, 6])?);
        Ok((format!("{expected}"), format!("{}", contract_even(&s))))
    });
    b.add("three.weight.odd.pattern", || {
        let s = SFraction::from_cycle(&[1, 2, 3])?;
        let expected = JFraction::new(eps(&[], &[3, 4, 5])?, eps(&[], &[6, 2, 3])?);
        Ok((format!("{expected}"), format!("{}", contract_odd(&s))))
    });
    let _ = order;
}

fn shift_family_checks(b: &mut Builder, order: usize) {
    let frozen_p_moments: &[&[i64]] = &[
        &[1],
        &[3, 1],
        &[21, 10, 1],
        &[183, 103, 17, 1],
        &[1785, 1108, 234, 24, 1],
        &[18651, 12349, 3034, 414, 31, 1],
    ];
    let frozen_q_moments: &[&[i64]] = &[
        &[1],
        &[7, 1],
        &[61, 14, 1],
        &[595, 171, 21, 1],
        &[6217, 2044, 330, 28, 1],
        &[68047, 24485, 4690, 538, 35, 1],
    ];
    let frozen_interleaved: &[&[i64]] = &[
        &[1],
        &[3, 1],
        &[21, 7, 1],
        &[183, 61, 10, 1],
        &[1785, 595, 103, 14, 1],
        &[18651, 6217, 1108, 171, 17, 1],
    ];
    let frozen_production: &[&[i64]] = &[
        &[3, 1, 0, 0, 0, 0],
        &[12, 4, 1, 0, 0, 0],
        &[36, 12, 3, 1, 0, 0],
        &[144, 48, 12, 4, 1, 0],
        &[432, 144, 36, 12, 3, 1],
        &[1728, 576, 144, 48, 12, 4],
    ];
    let frozen_variant_moments: &[&[i64]] = &[
        &[1],
        &[4, 1],
        &[28, 11, 1],
        &[244, 117, 18, 1],
        &[2380, 1279, 255, 25, 1],
        &[24868, 14393, 3364, 442, 32, 1],
    ];
    let frozen_variant_interleaved: &[&[i64]] = &[
        &[1],
        &[4, 1],
        &[28, 7, 1],
        &[244, 61, 11, 1],
        &[2380, 595, 117, 14, 1],
        &[24868, 6217, 1279, 171, 18, 1],
    ];
    let p = || -> Result<Recurrence> {
        Ok(Recurrence::new(
            eps(&[3], &[7])?,
            eps(&[], &[12])?,
            rat(-3, 1),
        ))
    };
    let q = || -> Result<Recurrence> {
        Ok(Recurrence::new(
            eps(&[], &[7])?,
            eps(&[], &[12])?,
            rat(-7, 1),
        ))
    };
    let p_variant = || -> Result<Recurrence> {
        Ok(Recurrence::new(
            eps(&[4], &[7])?,
            eps(&[], &[12])?,
            rat(-4, 1),
        ))
    };
    b.add("shift.family.p.moments", || {
        Ok((lit(frozen_p_moments), tri(&p()?.moment_matrix(6)?)))
    });
    b.add("shift.family.q.moments", || {
        Ok((lit(frozen_q_moments), tri(&q()?.moment_matrix(6)?)))
    });
    b.add("shift.family.p.coefficients.pair", || {
        let direct = pair("1/(1+3*x)", "x/(1+7*x+12*x^2)", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&p()?.polynomials(6))))
    });
    b.add("shift.family.q.coefficients.pair", || {
        let direct = pair("1/(1+7*x+12*x^2)", "x/(1+7*x+12*x^2)", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&q()?.polynomials(6))))
    });
    b.add("shift.family.moments.contraction", || {
        // The two recurrences are the even and odd contractions of the
        // weight cycle 3, 4.
        let s = SFraction::from_cycle(&[3, 4])?;
        let expected = format!("{} ; {}", contract_even(&s), contract_odd(&s));
        let actual = format!(
            "{} ; {}",
            JFraction::new(p()?.b().clone(), p()?.c().clone()),
            JFraction::new(q()?.b().clone(), q()?.c().clone())
        );
        Ok((expected, actual))
    });
    b.add("shift.family.interleaved.rows", || {
        let fam = InterleavedFamily::new(p()?, q()?);
        Ok((lit(frozen_interleaved), tri(&fam.moment_matrix(6)?)))
    });
    b.add("shift.family.production.rows", || {
        let fam = InterleavedFamily::new(p()?, q()?);
        let got = production_of(&fam.moment_matrix(7)?)?;
        Ok((pm_lit(frozen_production)?, pm(&got)))
    });
    b.add("shift.family.production.bidiagonal", || {
        let spec = BidiagonalSpec::from_cycle(&[3, 4])?;
        let fam = InterleavedFamily::new(p()?, q()?);
        let got = production_of(&fam.moment_matrix(7)?)?;
        Ok((pm(&spec.production(6)?), pm(&got)))
    });
    b.add("shift.family.production.not.riordan", || {
        let fam = InterleavedFamily::new(p()?, q()?);
        let got = production_of(&fam.moment_matrix(7)?)?;
        Ok((
            "riordan-form: false".into(),
            format!("riordan-form: {}", got.is_riordan_production()),
        ))
    });
    b.add("shift.family.production.columns", || {
        let fam = InterleavedFamily::new(p()?, q()?);
        let got = production_of(&fam.moment_matrix(7)?)?;
        let col = |j: usize| -> Result<Series> {
            let mut v = Vec::new();
            for i in 0..6 {
                v.push(got.entry(i, j)?);
            }
            Ok(Series::from_coeffs(v))
        };
        let expected = format!(
            "{} | {} | {}",
            ser(&ev("3*(1+4*x)/(1-12*x^2)", 6)?, 6),
            ser(&ev("(1+4*x)/(1-12*x^2)", 6)?, 6),
            ser(&ev("x*(1+3*x)/(1-12*x^2)", 6)?, 6)
        );
        let actual = format!(
            "{} | {} | {}",
            ser(&col(0)?, 6),
            ser(&col(1)?, 6),
            ser(&col(2)?, 6)
        );
        Ok((expected, actual))
    });
    b.add("shift.family.moment.reversion", || {
        let f = ev("x*(1-4*x)/(1-x)", 9)?;
        let shifted = f.reversion()?.div_xpow(1)?;
        Ok((
            ser_lit(&[1, 3, 21, 183, 1785, 18651, 204141]),
            ser(&shifted, 7),
        ))
    });
    b.add("shift.family.moments.sfraction", || {
        let s = SFraction::from_cycle(&[3, 4])?;
        Ok((
            ser_lit(&[1, 3, 21, 183, 1785, 18651, 204141]),
            ser(&s.series(7), 7),
        ))
    });
    b.add("shift.variant.moments", || {
        Ok((
            lit(frozen_variant_moments),
            tri(&p_variant()?.moment_matrix(6)?),
        ))
    });
    b.add("shift.variant.coefficients.pair", || {
        let direct = pair("1/(1+4*x)", "x/(1+7*x+12*x^2)", order)?;
        Ok((tri(&direct.triangle(6)?), tri(&p_variant()?.polynomials(6))))
    });
    b.add("shift.variant.moments.sfraction", || {
        let s = SFraction::from_cycle(&[4, 3])?;
        Ok((
            ser_lit(&[1, 4, 28, 244, 2380, 24868]),
            ser(&s.series(6), 6),
        ))
    });
    b.add("shift.variant.interleaved.rows", || {
        let fam = InterleavedFamily::new(p_variant()?, q()?);
        Ok((
            lit(frozen_variant_interleaved),
            tri(&fam.moment_matrix(6)?),
        ))
    });
    b.add("shift.variant.bidiagonal.moments", || {
        let spec = BidiagonalSpec::from_cycle(&[4, 3])?;
        let arr = spec.array(6)?;
        let col: Vec<Rat> = (0..6).map(|i| arr.entry(i, 0).unwrap()).collect();
        Ok((
            ser_lit(&[1, 4, 28, 244, 2380, 24868]),
            ser(&Series::from_coeffs(col), 6),
        ))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let report = run_all(32);
        let failures: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{}\n  expected: {}\n  actual:   {}", c.name, c.expected, c.actual))
            .collect();
        assert!(
            failures.is_empty(),
            "{} of {} checks failed:\n{}",
            failures.len(),
            report.total,
            failures.join("\n")
        );
        assert!(report.total >= 30, "only {} checks", report.total);
    }

    #[test]
    fn reports_serialize() {
        let report = run_all(16);
        let json = report.to_json();
        assert!(json.contains("\"name\""));
        assert!(json.contains("catalan.rows"));
        let text = report.to_text();
        assert!(text.contains("checks:"));
    }

    #[test]
    fn failures_are_reported_not_panicked() {
        // A builder callback that errors out produces a failing check.
        let mut b = Builder { checks: Vec::new() };
        b.add("always.errors", || Err(Error::EmptyPeriod));
        assert!(!b.checks[0].pass);
        assert!(b.checks[0].actual.contains("error"));
    }
}
