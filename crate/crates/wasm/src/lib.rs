//! Browser bindings for the Riordan-array toolkit.
//!
//! Every export takes plain strings and returns a JSON payload, so the page
//! needs no glue beyond `JSON.parse`.  Failures come back as
//! `{"error": text}` instead of thrown exceptions, which keeps the
//! host-side handling uniform.  All entries are exact rationals rendered
//! as strings ("105" or "3/2") — nothing is rounded.

use riordan_core::cfrac::{contract_even, contract_odd, SFraction};
use riordan_core::embedding;
use riordan_core::epseq::EpSeq;
use riordan_core::error::Error;
use riordan_core::fps::Series;
use riordan_core::gfparse;
use riordan_core::prodmat::bidiagonal_construction;
use riordan_core::rational::{parse_rat_list, Rat};
use riordan_core::riordan::RiordanArray;
use riordan_core::triangle::Triangle;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Row counts are clamped to keep the page responsive; entries grow
/// quickly enough that more rows stop fitting on screen anyway.
const MAX_ROWS: usize = 16;

fn clamp_rows(rows: usize) -> usize {
    rows.clamp(1, MAX_ROWS)
}

fn series_cells(s: &Series, n: usize) -> Vec<String> {
    s.coeffs().iter().take(n).map(|c| c.to_string()).collect()
}

fn triangle_cells(t: &Triangle) -> Vec<Vec<String>> {
    t.rows()
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect()
}

fn rat_cells(v: &[Rat]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn parse_series(text: &str, order: usize) -> Result<Series, Error> {
    let expr = gfparse::parse(text)?;
    gfparse::eval(&expr, order)
}

fn parse_pair(g: &str, f: &str, order: usize) -> Result<RiordanArray, Error> {
    RiordanArray::new(parse_series(g, order)?, parse_series(f, order)?)
}

fn parse_weights(text: &str) -> Result<Vec<Rat>, Error> {
    parse_rat_list(text).ok_or_else(|| Error::Syntax {
        offset: 0,
        expected: vec!["comma-separated integers or fractions".into()],
        found: text.into(),
    })
}

fn wrap(result: Result<Value, Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn pair_payload(r: &RiordanArray, rows: usize) -> Result<Value, Error> {
    Ok(json!({
        "g": series_cells(r.g(), rows),
        "f": series_cells(r.f(), rows),
        "rows": triangle_cells(&r.triangle(rows)?),
    }))
}

fn triangle_payload(g: &str, f: &str, rows: usize) -> Result<Value, Error> {
    let rows = clamp_rows(rows);
    let r = parse_pair(g, f, 2 * rows)?;
    pair_payload(&r, rows)
}

fn decompose_payload(g: &str, f: &str, rows: usize) -> Result<Value, Error> {
    let rows = clamp_rows(rows);
    let r = parse_pair(g, f, 2 * rows + 2)?;
    let d = embedding::decompose(&r)?;
    Ok(json!({
        "parent": triangle_cells(&r.triangle(rows)?),
        "a": pair_payload(&d.a, rows)?,
        "b": pair_payload(&d.b, rows)?,
    }))
}

fn cfrac_payload(pre: &str, period: &str, rows: usize) -> Result<Value, Error> {
    let rows = clamp_rows(rows);
    let pre_vals = if pre.trim().is_empty() {
        Vec::new()
    } else {
        parse_weights(pre)?
    };
    let period_vals = parse_weights(period)?;
    let s = SFraction::new(EpSeq::new(pre_vals, period_vals)?)?;
    let (production, array) = bidiagonal_construction(&s.bidiagonal_spec()?, rows)?;
    let even = contract_even(&s);
    let odd = contract_odd(&s);
    let jf = |j: &riordan_core::cfrac::JFraction| {
        json!({
            "b": rat_cells(&j.b().take(rows)),
            "c": rat_cells(&j.c().take(rows)),
        })
    };
    Ok(json!({
        "series": series_cells(&s.series(rows), rows),
        "production": triangle_cells_from(production.rows()),
        "array": triangle_cells(&array),
        "even": jf(&even),
        "odd": jf(&odd),
    }))
}

fn triangle_cells_from(rows: &[Vec<Rat>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| rat_cells(r)).collect()
}

/// Triangle of a pair of generating functions, row-by-row.
#[wasm_bindgen]
pub fn triangle_json(g: &str, f: &str, rows: usize) -> String {
    wrap(triangle_payload(g, f, rows))
}

/// Parent triangle together with its two interleaved sub-arrays.
#[wasm_bindgen]
pub fn decompose_json(g: &str, f: &str, rows: usize) -> String {
    wrap(decompose_payload(g, f, rows))
}

/// Continued-fraction explorer: moment series, production matrix, the
/// generated array, and both contractions of the weight sequence.
#[wasm_bindgen]
pub fn cfrac_json(pre: &str, period: &str, rows: usize) -> String {
    wrap(cfrac_payload(pre, period, rows))
}
