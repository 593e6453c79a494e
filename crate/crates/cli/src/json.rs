//! Compact JSON with every float written as 17 significant digits, which
//! round-trips `f64` exactly and keeps output byte-stable.

use std::io;

use hyperplex::{Bicomplex, Complex};
use serde_json::ser::{CompactFormatter, Formatter};
use serde_json::{json, Value};

struct Digits17;

impl Formatter for Digits17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        CompactFormatter.write_f32(w, value)
    }
}

pub fn to_string(v: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Digits17);
    serde::Serialize::serialize(v, &mut ser).expect("writing to memory");
    String::from_utf8(out).expect("JSON is UTF-8")
}

/// Non-finite values have no JSON form and become `null`.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn complex(z: Complex) -> Value {
    json!([num(z.re), num(z.im)])
}

pub fn bicomplex(p: Bicomplex) -> Value {
    json!({
        "quadruple": p.to_quadruple().map(num),
        "pair": [complex(p.a), complex(p.b)],
    })
}
