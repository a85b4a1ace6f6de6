//! Named specs exercised by the CLI, the property suites and the acceptance run.

use crate::lang::parse_spec;
use crate::setspec::SetSpec;

const BUILTINS: &[&str] = &[
    "interval-union(a=2, b=2)",
    "interval-union(a=2, b=3)",
    "interval-union(a=2, b=4)",
    "interval-union(a=2, b=5)",
    "interval-union(a=2, b=10)",
    "interval-union(a=3, b=4)",
    "interval-union(a=3, b=10)",
    "interval-union(a=5, b=41)",
    "interval-union(a=5/4, b=13/8)",
    "interval-union(a=50/49, b=2501/2401)",
    "interval-union(a=3/2, b=2)",
    "leading-digit(base=10, digits={1})",
    "leading-digit(base=10, digits={1,2,3,4,5})",
    "leading-digit(base=5, digits={1})",
    "leading-digit(base=5, digits={2})",
    "leading-digit(base=5, digits={3,4})",
    "powers(base=2, min-exp=1)",
    "powers(base=3, min-exp=0)",
    "factorial(A)",
    "factorial(B)",
    "union(powers(base=2, min-exp=2); powers(base=3, min-exp=2))",
    "explicit(4,8,12)",
];

/// Every built-in spec, in a fixed order.
pub fn builtin_specs() -> Vec<SetSpec> {
    BUILTINS.iter().map(|s| parse_spec(s).expect("built-in spec parses")).collect()
}

/// The built-in spec texts, as accepted by the spec parser.
pub fn builtin_texts() -> &'static [&'static str] {
    BUILTINS
}
