mod common;

use chowring::expr::{parse, tokenize, ExprError};
use chowring::presentations::bundle_over_curve;
use chowring::ring::{frac, int};
use common::ROUND_TRIP;

#[test]
fn round_trip_cases() {
    assert!(ROUND_TRIP.len() >= 30);
    for &(input, printed) in ROUND_TRIP {
        let ast = parse(input).unwrap_or_else(|e| panic!("{input}: {e}"));
        assert_eq!(ast.to_string(), printed, "{input}");
        assert_eq!(parse(printed).unwrap(), ast, "{input}");
    }
}

#[test]
fn precedence_by_value() {
    let ring = bundle_over_curve(0, 3, 4).unwrap();
    let eval = |t: &str| parse(t).unwrap().eval(&ring).unwrap();
    // -s^4 = -(s^4) = 3 s^3 f, while (-s)^4 = s^4 = -3 s^3 f.
    assert_eq!(eval("-s^4").integrate().unwrap(), int(3));
    assert_eq!(eval("(-s)^4").integrate().unwrap(), int(-3));
    assert_eq!(eval("s^3*f/2").integrate().unwrap(), frac(1, 2));
    assert_eq!(eval("2*3^2"), eval("18"));
    assert_eq!(eval("1 - 2 - 3"), eval("-4"));
    assert_eq!(eval("12/2/3"), eval("2"));
}

#[test]
fn syntax_errors_carry_positions() {
    let pos = |t: &str| match parse(t) {
        Err(ExprError::Syntax { pos, .. }) => pos,
        other => panic!("{t}: {other:?}"),
    };
    assert_eq!(pos("s^f"), 2);
    assert_eq!(pos("s^-2"), 2);
    assert_eq!(pos("s/0"), 2);
    assert_eq!(pos("s/f"), 2);
    assert_eq!(pos("s/(2)"), 2);
    assert_eq!(pos("s +"), 3);
    assert_eq!(pos("(s"), 2);
    assert_eq!(pos("s f"), 2);
    assert_eq!(pos(""), 0);
    assert_eq!(pos("s^2^3"), 3);
    assert!(matches!(
        parse("4·s"),
        Err(ExprError::InvalidCharacter { pos: 1, .. })
    ));
    assert!(tokenize("s $ f").is_err());
}

#[test]
fn unknown_identifier() {
    let ring = bundle_over_curve(0, 0, 4).unwrap();
    assert_eq!(
        parse("s*x").unwrap().eval(&ring),
        Err(ExprError::UnknownIdentifier {
            name: "x".into(),
            pos: 2
        })
    );
}
