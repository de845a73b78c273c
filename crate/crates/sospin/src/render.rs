//! Table documents and their renderings: text, JSON, LaTeX, CSV.
//!
//! JSON and CSV are bit-exact (rationals as "numerator/denominator"
//! strings); text is for humans; LaTeX mirrors the appendix-style layouts.
//! All four formats render the same underlying rows in the same order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipole::{multipole_basis, MultipoleComponent};
use crate::rational::{frac_string, parse_frac, pretty_string};
use crate::spinalg::SpinAlgebraTable;
use crate::uea::{Axis, PbwMonomial, UeaElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
    Csv,
}

impl OutputFormat {
    pub const ALL: [OutputFormat; 4] = [
        OutputFormat::Text,
        OutputFormat::Json,
        OutputFormat::Latex,
        OutputFormat::Csv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Latex => "latex",
            OutputFormat::Csv => "csv",
        }
    }
}

/// One serialized PBW term: exponent triple and exact coefficient.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub m: [u32; 3],
    pub c: String,
}

/// Canonical term list: sorted lexicographically by monomial, coefficients
/// as numerator/denominator strings.
pub fn element_terms(e: &UeaElement) -> Vec<TermJson> {
    e.terms()
        .map(|(m, c)| TermJson {
            m: m.0,
            c: frac_string(c),
        })
        .collect()
}

pub fn element_from_terms(terms: &[TermJson]) -> Result<UeaElement> {
    let mut e = UeaElement::zero();
    for t in terms {
        e.add_term(PbwMonomial(t.m), parse_frac(&t.c)?);
    }
    Ok(e)
}

fn indices_strings(indices: &[Axis]) -> Vec<String> {
    indices.iter().map(|a| a.name().to_string()).collect()
}

fn indices_from_strings(strings: &[String]) -> Result<Vec<Axis>> {
    strings
        .iter()
        .map(|s| Axis::from_name(s).ok_or_else(|| Error::BadTable(format!("unknown axis {s:?}"))))
        .collect()
}

/// Display label of a component: `T2[xy]`.
pub fn component_label(level: u32, indices: &[Axis]) -> String {
    let idx: String = indices.iter().map(|a| a.name()).collect();
    format!("T{level}[{idx}]")
}

fn latex_element(e: &UeaElement) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&PbwMonomial, &crate::rational::Rational)> = e.terms().collect();
    terms.sort_by_key(|(m, _)| (std::cmp::Reverse(m.degree()), std::cmp::Reverse(**m)));
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        use num_traits::{One, Signed};
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let scalar = **m == PbwMonomial::ONE;
        if !mag.is_one() || scalar {
            if num_traits::One::is_one(mag.denom()) {
                let _ = write!(out, "{}", mag.numer());
            } else {
                let _ = write!(out, "\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom());
            }
            if !scalar {
                out.push(' ');
            }
        }
        for a in Axis::ALL {
            match m.exponent(a) {
                0 => {}
                1 => {
                    let _ = write!(out, "J_{{{}}}", a.name());
                }
                e => {
                    let _ = write!(out, "J_{{{}}}^{{{}}}", a.name(), e);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Multipole image tables
// ---------------------------------------------------------------------------

/// The canonical component images for every level up to `k_max`.
pub struct MultipoleTableDoc {
    pub k_max: u32,
    pub sections: Vec<Vec<MultipoleComponent>>,
}

pub fn multipole_table(k_max: u32) -> MultipoleTableDoc {
    MultipoleTableDoc {
        k_max,
        sections: (0..=k_max).map(|k| multipole_basis(k).components).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultipoleComponentJson {
    pub indices: Vec<String>,
    pub expansion: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultipoleSectionJson {
    pub k: u32,
    pub components: Vec<MultipoleComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultipoleTableJson {
    pub k_max: u32,
    pub tables: Vec<MultipoleSectionJson>,
}

pub fn multipole_table_json(doc: &MultipoleTableDoc) -> MultipoleTableJson {
    MultipoleTableJson {
        k_max: doc.k_max,
        tables: doc
            .sections
            .iter()
            .enumerate()
            .map(|(k, comps)| MultipoleSectionJson {
                k: k as u32,
                components: comps
                    .iter()
                    .map(|c| MultipoleComponentJson {
                        indices: indices_strings(&c.indices),
                        expansion: element_terms(&c.expansion),
                    })
                    .collect(),
            })
            .collect(),
    }
}

/// Parses the JSON rendering back; the round trip is part of the contract.
pub fn parse_multipole_table_json(text: &str) -> Result<Vec<(u32, Vec<Axis>, UeaElement)>> {
    let parsed: MultipoleTableJson =
        serde_json::from_str(text).map_err(|e| Error::BadTable(e.to_string()))?;
    let mut out = Vec::new();
    for section in &parsed.tables {
        for comp in &section.components {
            out.push((
                section.k,
                indices_from_strings(&comp.indices)?,
                element_from_terms(&comp.expansion)?,
            ));
        }
    }
    Ok(out)
}

pub fn render_multipole_table(doc: &MultipoleTableDoc, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&multipole_table_json(doc)).unwrap();
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "# multipole component images, levels 0..{}", doc.k_max);
            for (k, comps) in doc.sections.iter().enumerate() {
                let _ = writeln!(out);
                let plural = if comps.len() == 1 { "" } else { "s" };
                let _ = writeln!(out, "level {k} ({} component{plural})", comps.len());
                for c in comps {
                    let _ = writeln!(
                        out,
                        "  {} = {}",
                        component_label(c.level, &c.indices),
                        c.expansion
                    );
                }
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            out.push_str("\\begin{table}[H]\n\\centering\n\\begin{tabular}{lll}\n\\hline\n");
            out.push_str("$k$ & component & image \\\\\n\\hline\n");
            for (k, comps) in doc.sections.iter().enumerate() {
                for c in comps {
                    let idx: String = c.indices.iter().map(|a| a.name()).collect();
                    let _ = writeln!(
                        out,
                        "${k}$ & $T_{{{k}}}[{idx}]$ & ${}$ \\\\",
                        latex_element(&c.expansion)
                    );
                }
                out.push_str("\\hline\n");
            }
            out.push_str("\\end{tabular}\n\\end{table}\n");
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("k,indices,e_x,e_y,e_z,coeff\n");
            for (k, comps) in doc.sections.iter().enumerate() {
                for c in comps {
                    let idx: String = c.indices.iter().map(|a| a.name()).collect();
                    for (m, coeff) in c.expansion.terms() {
                        let _ = writeln!(
                            out,
                            "{k},{idx},{},{},{},{}",
                            m.0[0],
                            m.0[1],
                            m.0[2],
                            frac_string(coeff)
                        );
                    }
                }
            }
            out
        }
    }
}

// ---------------------------------------------------------------------------
// Spin algebra tables
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinBasisJson {
    pub n: u32,
    pub indices: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinConstantJson {
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinTableJson {
    pub two_s: u32,
    pub basis: Vec<SpinBasisJson>,
    pub constants: Vec<SpinConstantJson>,
}

pub fn spin_table_json(table: &SpinAlgebraTable) -> SpinTableJson {
    SpinTableJson {
        two_s: table.two_s(),
        basis: table
            .basis()
            .iter()
            .map(|b| SpinBasisJson {
                n: b.level,
                indices: indices_strings(&b.indices),
            })
            .collect(),
        constants: table
            .constants()
            .into_iter()
            .map(|(i, j, l, c)| SpinConstantJson {
                i,
                j,
                l,
                c: frac_string(&c),
            })
            .collect(),
    }
}

/// Parses the JSON rendering back into (two_s, basis labels, constants).
#[allow(clippy::type_complexity)]
pub fn parse_spin_table_json(
    text: &str,
) -> Result<(
    u32,
    Vec<(u32, Vec<Axis>)>,
    Vec<(usize, usize, usize, crate::rational::Rational)>,
)> {
    let parsed: SpinTableJson =
        serde_json::from_str(text).map_err(|e| Error::BadTable(e.to_string()))?;
    let mut basis = Vec::new();
    for b in &parsed.basis {
        basis.push((b.n, indices_from_strings(&b.indices)?));
    }
    let mut constants = Vec::new();
    for c in &parsed.constants {
        constants.push((c.i, c.j, c.l, parse_frac(&c.c)?));
    }
    Ok((parsed.two_s, basis, constants))
}

fn spin_product_string(table: &SpinAlgebraTable, i: usize, j: usize) -> String {
    use num_traits::{One, Signed};
    let terms: Vec<(&usize, &crate::rational::Rational)> = table.product_terms(i, j).collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, (l, c)) in terms.iter().enumerate() {
        let b = &table.basis()[**l];
        let mag = c.abs();
        if pos == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            let _ = write!(out, "{} ", pretty_string(&mag));
        }
        out.push_str(&component_label(b.level, &b.indices));
    }
    out
}

pub fn render_spin_table(table: &SpinAlgebraTable, format: OutputFormat) -> String {
    let dim = table.dimension();
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&spin_table_json(table)).unwrap();
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# spin algebra table, two_s = {} (dimension {})",
                table.two_s(),
                dim
            );
            let _ = writeln!(
                out,
                "# Casimir scalar: {}",
                pretty_string(table.casimir_scalar())
            );
            let _ = writeln!(out);
            let _ = writeln!(out, "basis:");
            for (i, b) in table.basis().iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  {i}: {} = {}",
                    component_label(b.level, &b.indices),
                    b.expansion
                );
            }
            let _ = writeln!(out);
            let _ = writeln!(out, "products:");
            for i in 0..dim {
                for j in 0..dim {
                    let bi = &table.basis()[i];
                    let bj = &table.basis()[j];
                    let _ = writeln!(
                        out,
                        "  {} * {} = {}",
                        component_label(bi.level, &bi.indices),
                        component_label(bj.level, &bj.indices),
                        spin_product_string(table, i, j)
                    );
                }
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            let label = |b: &crate::spinalg::SpinBasisElement| -> String {
                let idx: String = b.indices.iter().map(|a| a.name()).collect();
                format!("T_{{{}}}[{}]", b.level, idx)
            };
            out.push_str("\\begin{table}[H]\n\\centering\n\\resizebox{\\linewidth}{!}{%\n");
            let _ = writeln!(out, "\\begin{{tabular}}{{l|{}}}", "l".repeat(dim));
            out.push_str("\\hline\n$\\otimes$");
            for j in 0..dim {
                let _ = write!(out, " & ${}$", label(&table.basis()[j]));
            }
            out.push_str(" \\\\\n\\hline\n");
            for i in 0..dim {
                let _ = write!(out, "${}$", label(&table.basis()[i]));
                for j in 0..dim {
                    use num_traits::{One, Signed};
                    let terms: Vec<_> = table.product_terms(i, j).collect();
                    if terms.is_empty() {
                        out.push_str(" & $0$");
                        continue;
                    }
                    let mut cell = String::new();
                    for (pos, (l, c)) in terms.iter().enumerate() {
                        let mag = c.abs();
                        if pos == 0 {
                            if c.is_negative() {
                                cell.push('-');
                            }
                        } else if c.is_negative() {
                            cell.push_str(" - ");
                        } else {
                            cell.push_str(" + ");
                        }
                        if !mag.is_one() {
                            if num_traits::One::is_one(mag.denom()) {
                                let _ = write!(cell, "{} ", mag.numer());
                            } else {
                                let _ =
                                    write!(cell, "\\tfrac{{{}}}{{{}}} ", mag.numer(), mag.denom());
                            }
                        }
                        cell.push_str(&label(&table.basis()[**l]));
                    }
                    let _ = write!(out, " & ${cell}$");
                }
                out.push_str(" \\\\\n");
            }
            out.push_str("\\hline\n\\end{tabular}}\n\\end{table}\n");
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("i,j,l,c\n");
            for (i, j, l, c) in table.constants() {
                let _ = writeln!(out, "{i},{j},{l},{}", frac_string(&c));
            }
            out
        }
    }
}

/// Decomposition coefficients rendered for the CLI.
pub fn render_decomposition(
    coeffs: &[(crate::spinalg::CentralIndex, crate::rational::Rational)],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Row {
                m: u32,
                n: u32,
                component: usize,
                indices: String,
                c: String,
            }
            let rows: Vec<Row> = coeffs
                .iter()
                .map(|(idx, c)| Row {
                    m: idx.casimir_power,
                    n: idx.level,
                    component: idx.component,
                    indices: multipole_basis(idx.level).components[idx.component]
                        .indices
                        .iter()
                        .map(|a| a.name())
                        .collect(),
                    c: frac_string(c),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&rows).unwrap();
            s.push('\n');
            s
        }
        _ => {
            let mut out = String::new();
            for (idx, c) in coeffs {
                let comp = &multipole_basis(idx.level).components[idx.component];
                let label = component_label(idx.level, &comp.indices);
                let prefix = match idx.casimir_power {
                    0 => String::new(),
                    1 => "C ".to_string(),
                    m => format!("C^{m} "),
                };
                let _ = writeln!(out, "  {} * {prefix}{label}", pretty_string(c));
            }
            if coeffs.is_empty() {
                out.push_str("  0\n");
            }
            out
        }
    }
}
