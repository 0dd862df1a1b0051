//! JSON documents for operads and algebras.
//!
//! Rational scalars are strings such as `"-3/2"`; prime-field scalars are
//! plain integers. Structure tensors are sparse lists of
//! `[left, right, output, scalar]`; anything omitted is zero, and omitted
//! actions are the identity.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Vector};
use crate::operad::TruncatedOperad;

#[derive(Serialize, Deserialize)]
struct ArityData {
    arity: usize,
    dim: usize,
    /// Matrices of `s_1, ..., s_{n−1}`; row `b` is the image of `e_b`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    actions: Vec<Vec<Vec<Value>>>,
}

#[derive(Serialize, Deserialize)]
struct CompositionData {
    m: usize,
    n: usize,
    i: usize,
    entries: Vec<(usize, usize, usize, Value)>,
}

#[derive(Serialize, Deserialize)]
struct OperadDoc {
    kind: String,
    field: String,
    max_arity: usize,
    arities: Vec<ArityData>,
    identity: Vec<Value>,
    compositions: Vec<CompositionData>,
}

#[derive(Serialize, Deserialize)]
struct ProductData {
    i: usize,
    j: usize,
    entries: Vec<(usize, usize, usize, Value)>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    kind: String,
    field: String,
    max_degree: usize,
    dims: Vec<usize>,
    unit: Vec<Value>,
    products: Vec<ProductData>,
    /// `"e"`/`"o"` per basis vector for degrees `1..=D`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    typing: Option<Vec<Vec<String>>>,
}

/// Either kind of document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Operad(TruncatedOperad),
    Algebra(GradedAlgebra),
}

fn scalar_out(s: &Scalar) -> Value {
    match s {
        Scalar::Q(r) => Value::String(if r.is_integer() { r.numer().to_string() } else { r.to_string() }),
        Scalar::Fp { value, .. } => Value::from(*value),
    }
}

fn scalar_in(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse_scalar(s),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("scalar {n} is not an integer")))?;
            Ok(field.int(i))
        }
        other => Err(Error::Parse(format!("expected a scalar, found {other}"))),
    }
}

fn vector_in(field: Field, v: &[Value]) -> Result<Vector> {
    v.iter().map(|x| scalar_in(field, x)).collect()
}

fn entries_out(
    count: (usize, usize),
    value: impl Fn(usize, usize) -> Vector,
) -> Vec<(usize, usize, usize, Value)> {
    let mut out = Vec::new();
    for a in 0..count.0 {
        for b in 0..count.1 {
            for (c, s) in value(a, b).iter().enumerate() {
                if !s.is_zero() {
                    out.push((a, b, c, scalar_out(s)));
                }
            }
        }
    }
    out
}

fn kind_of(text: &str) -> Result<String> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    v.get("kind")
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| Error::Parse("missing \"kind\"".into()))
}

fn check_kind(found: &str, expected: &str) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::WrongKind {
            expected: expected.into(),
            found: found.into(),
        })
    }
}

pub fn operad_to_json(p: &TruncatedOperad) -> String {
    let doc = OperadDoc {
        kind: "operad".into(),
        field: p.field().to_string(),
        max_arity: p.max_arity(),
        arities: (1..=p.max_arity())
            .map(|n| ArityData {
                arity: n,
                dim: p.dim(n),
                actions: (1..n)
                    .map(|k| {
                        p.action(n, k)
                            .row_vectors()
                            .iter()
                            .map(|row| row.iter().map(scalar_out).collect())
                            .collect()
                    })
                    .collect(),
            })
            .collect(),
        identity: p.identity().iter().map(scalar_out).collect(),
        compositions: p
            .composition_keys()
            .into_iter()
            .map(|(m, n, i)| CompositionData {
                m,
                n,
                i,
                entries: entries_out((p.dim(m), p.dim(n)), |a, b| p.composition_of_basis(m, n, i, a, b).clone()),
            })
            .filter(|c| !c.entries.is_empty())
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn operad_from_json(text: &str) -> Result<TruncatedOperad> {
    check_kind(&kind_of(text)?, "operad")?;
    let doc: OperadDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field: Field = doc.field.parse()?;
    let mut dims = vec![0; doc.max_arity];
    for a in &doc.arities {
        if a.arity == 0 || a.arity > doc.max_arity {
            return Err(Error::Parse(format!("arity {} outside 1..={}", a.arity, doc.max_arity)));
        }
        dims[a.arity - 1] = a.dim;
    }
    let mut p = TruncatedOperad::new(field, &dims)?;
    p.set_identity(vector_in(field, &doc.identity)?)?;
    for a in &doc.arities {
        if a.actions.is_empty() {
            continue;
        }
        if a.actions.len() + 1 != a.arity {
            return Err(Error::Parse(format!(
                "arity {} lists {} action matrices, expected {}",
                a.arity,
                a.actions.len(),
                a.arity.saturating_sub(1)
            )));
        }
        for (k, rows) in a.actions.iter().enumerate() {
            let rows = rows.iter().map(|r| vector_in(field, r)).collect::<Result<Vec<_>>>()?;
            p.set_action(a.arity, k + 1, Matrix::from_rows(field, a.dim, rows)?)?;
        }
    }
    for c in &doc.compositions {
        for (a, b, out, s) in &c.entries {
            p.set_composition_entry((c.m, c.n, c.i), *a, *b, *out, scalar_in(field, s)?)?;
        }
    }
    Ok(p)
}

pub fn algebra_to_json(a: &GradedAlgebra) -> String {
    let doc = AlgebraDoc {
        kind: "algebra".into(),
        field: a.field().to_string(),
        max_degree: a.max_degree(),
        dims: a.dims(),
        unit: a.unit().iter().map(scalar_out).collect(),
        products: a
            .product_keys()
            .into_iter()
            .map(|(i, j)| ProductData {
                i,
                j,
                entries: entries_out((a.dim(i), a.dim(j)), |x, y| a.product_of_basis(i, j, x, y).clone()),
            })
            .filter(|p| !p.entries.is_empty())
            .collect(),
        typing: a.typing().map(|t| {
            t[1..]
                .iter()
                .map(|flags| flags.iter().map(|&o| if o { "o" } else { "e" }.to_string()).collect())
                .collect()
        }),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn algebra_from_json(text: &str) -> Result<GradedAlgebra> {
    check_kind(&kind_of(text)?, "algebra")?;
    let doc: AlgebraDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field: Field = doc.field.parse()?;
    if doc.dims.len() != doc.max_degree + 1 {
        return Err(Error::Parse(format!(
            "{} dims listed for max degree {}",
            doc.dims.len(),
            doc.max_degree
        )));
    }
    let mut a = GradedAlgebra::new(field, &doc.dims)?;
    a.set_unit(vector_in(field, &doc.unit)?)?;
    for p in &doc.products {
        for (x, y, out, s) in &p.entries {
            a.set_product_entry((p.i, p.j), *x, *y, *out, scalar_in(field, s)?)?;
        }
    }
    if let Some(t) = doc.typing {
        let mut odd = vec![Vec::new()];
        for flags in t {
            odd.push(
                flags
                    .iter()
                    .map(|f| match f.as_str() {
                        "o" => Ok(true),
                        "e" => Ok(false),
                        other => Err(Error::Parse(format!("type flag must be \"e\" or \"o\", found {other:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        a.set_typing(odd)?;
    }
    Ok(a)
}

/// Parses either kind of document.
pub fn object_from_json(text: &str) -> Result<Object> {
    match kind_of(text)?.as_str() {
        "operad" => Ok(Object::Operad(operad_from_json(text)?)),
        "algebra" => Ok(Object::Algebra(algebra_from_json(text)?)),
        other => Err(Error::Parse(format!("unknown kind {other:?}"))),
    }
}

pub fn object_to_json(o: &Object) -> String {
    match o {
        Object::Operad(p) => operad_to_json(p),
        Object::Algebra(a) => algebra_to_json(a),
    }
}
