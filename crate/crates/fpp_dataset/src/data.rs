//! Literal dataset in the canonical polynomial grammar (`w` is ω with ω² = −7).

/// Base cubics keyed by equation number; the remaining numbers are g₃-images.
pub const BASE_EQUATIONS: &[(usize, &str)] = &[
    (1, "(1/1+0/1*w)*U1*U2*U3+(1/1-1/1*w)*U3^2*U4+(1/1-1/1*w)*U1^2*U5+(1/1-1/1*w)*U2^2*U6+(10/1-2/1*w)*U4*U5*U6"),
    (2, "(-3/1+1/1*w)*U0^3+(-14/1-2/1*w)*U1*U2*U3+(8/1+0/1*w)*U0*U1*U4+(8/1+0/1*w)*U0*U2*U5+(8/1+0/1*w)*U0*U3*U6+(-56/1-8/1*w)*U4*U5*U6+(6/1+2/1*w)*U0*U1*U7+(6/1+2/1*w)*U0*U2*U8+(6/1+2/1*w)*U0*U3*U9+(7/1+1/1*w)*U7*U8*U9"),
    (3, "(11/1-1/1*w)*U0^3+(-16/1-16/1*w)*U1*U2*U3+(64/1+0/1*w)*U2*U4^2+(64/1+0/1*w)*U3*U5^2+(128/1+0/1*w)*U4*U5*U6+(64/1+0/1*w)*U1*U6^2+(-14/1-6/1*w)*U0*U1*U7+(8/1+8/1*w)*U3^2*U7+(8/1+8/1*w)*U1^2*U8+(-14/1-6/1*w)*U0*U2*U8+(8/1+8/1*w)*U2^2*U9+(-14/1-6/1*w)*U0*U3*U9+(-18/1-10/1*w)*U7*U8*U9"),
    (4, "(8/1+0/1*w)*U1*U2*U3+(-16/1+0/1*w)*U1^2*U5+(-16/1+0/1*w)*U3*U5^2+(-4/1-4/1*w)*U0*U3*U6+(16/1+0/1*w)*U5*U6*U7+(-1/1-1/1*w)*U0*U3*U9+(8/1+0/1*w)*U1*U6*U9+(8/1+0/1*w)*U5*U7*U9"),
    (7, "(12/1+4/1*w)*U1*U2*U3+(-4/1-4/1*w)*U0*U2*U5+(16/1+16/1*w)*U4*U5*U6+(3/1-1/1*w)*U0*U1*U7+(8/1+0/1*w)*U2*U4*U7+(-8/1+0/1*w)*U1^2*U8+(-2/1-2/1*w)*U0*U2*U8+(4/1+4/1*w)*U3*U5*U8+(-16/1+0/1*w)*U4*U6*U8+(8/1+0/1*w)*U6*U7*U8+(2/1+2/1*w)*U3*U8^2"),
    (10, "(2/1+6/1*w)*U1*U2*U3+(-20/1+4/1*w)*U1^2*U5+(-8/1+0/1*w)*U0*U2*U5+(-8/1+8/1*w)*U3*U5^2+(-8/1+0/1*w)*U0*U3*U6+(-40/1+8/1*w)*U4*U5*U6+(6/1-2/1*w)*U0*U1*U7+(8/1-8/1*w)*U5*U6*U7+(-8/1+0/1*w)*U1^2*U8+(-1/1-1/1*w)*U0*U2*U8+(8/1+8/1*w)*U3*U5*U8+(-32/1+0/1*w)*U4*U6*U8+(4/1-4/1*w)*U6*U7*U8+(6/1+2/1*w)*U3*U8^2+(-16/1+0/1*w)*U4*U5*U9+(8/1-8/1*w)*U5*U7*U9+(-4/1-4/1*w)*U4*U8*U9+(2/1-2/1*w)*U7*U8*U9+(4/1+0/1*w)*U1*U9^2"),
    (13, "(0/1-8/1*w)*U1^2*U3+(-7/1+5/1*w)*U0*U2*U3+(-28/1+4/1*w)*U0*U6^2+(4/1+0/1*w)*U0^2*U7+(8/1-8/1*w)*U1*U4*U7+(-20/1-4/1*w)*U2*U5*U7+(8/1+8/1*w)*U3*U6*U7+(-1/1-5/1*w)*U1*U7^2+(-8/1+0/1*w)*U2*U7*U8+(6/1+6/1*w)*U3*U7*U9"),
    (14, "(8/1+0/1*w)*U1^2*U3+(6/1-2/1*w)*U0*U1*U5+(16/1+0/1*w)*U3*U4*U6+(-16/1+0/1*w)*U5^2*U6+(2/1+2/1*w)*U2*U5*U7+(-8/1+0/1*w)*U3*U6*U7+(-2/1-2/1*w)*U3^2*U8+(-2/1+2/1*w)*U0*U6*U9+(-5/1-1/1*w)*U3*U7*U9"),
    (15, "(-6/1-2/1*w)*U1^2*U3+(6/1-2/1*w)*U0*U2*U3+(-4/1+4/1*w)*U0*U1*U5+(-4/1-4/1*w)*U3^2*U5+(8/1+0/1*w)*U1*U2*U6+(4/1+4/1*w)*U0*U6^2+(-4/1+0/1*w)*U0^2*U7+(1/1+1/1*w)*U1*U7^2+(-2/1+2/1*w)*U0*U1*U8+(4/1+0/1*w)*U3*U7*U9"),
    (16, "(-3/1+1/1*w)*U2^3+(-3/1+1/1*w)*U1^2*U3+(4/1+0/1*w)*U0*U2*U3+(-2/1-2/1*w)*U0^2*U4+(8/1+0/1*w)*U1*U4^2+(8/1+0/1*w)*U0*U1*U5+(-5/1-1/1*w)*U1*U2*U6+(4/1+4/1*w)*U3*U4*U6+(2/1+0/1*w)*U0*U1*U8+(3/1-1/1*w)*U2*U7*U8+(2/1+2/1*w)*U3*U4*U9"),
    (17, "(-4/1-4/1*w)*U2^3+(5/1+1/1*w)*U0*U2*U3+(12/1-4/1*w)*U3^2*U5+(16/1-16/1*w)*U2*U4*U5+(-4/1-4/1*w)*U2*U5*U7+(-8/1+0/1*w)*U1*U2*U9+(4/1+4/1*w)*U3*U4*U9+(-32/1+0/1*w)*U5^2*U9+(-16/1+0/1*w)*U5*U8*U9"),
    (18, "(8/1+0/1*w)*U1^2*U3+(-5/1-1/1*w)*U0*U2*U3+(4/1+4/1*w)*U3^2*U5+(4/1+4/1*w)*U1*U2*U6+(-16/1+16/1*w)*U5^2*U6+(8/1+0/1*w)*U2*U5*U7+(-16/1+0/1*w)*U3*U6*U7+(-8/1+8/1*w)*U5*U6*U8+(-8/1+0/1*w)*U3*U7*U9"),
    (19, "(-5/1-1/1*w)*U0^2*U4+(-8/1+0/1*w)*U2*U5*U7+(-1/1-1/1*w)*U1*U7^2+(4/1+0/1*w)*U0*U1*U8+(-4/1+0/1*w)*U2*U7*U8+(-5/1+1/1*w)*U1*U2*U9+(2/1-2/1*w)*U3*U4*U9+(2/1-2/1*w)*U0*U6*U9+(4/1+0/1*w)*U3*U7*U9+(2/1+0/1*w)*U8^2*U9+(2/1+0/1*w)*U0*U9^2"),
    (20, "(4/1+4/1*w)*U1^2*U3+(2/1-2/1*w)*U0*U2*U3+(-8/1+0/1*w)*U0^2*U4+(-12/1-4/1*w)*U1*U4^2+(0/1-8/1*w)*U0*U1*U5+(8/1-8/1*w)*U2*U4*U5+(5/1-1/1*w)*U0*U1*U8+(-10/1+2/1*w)*U3^2*U8+(16/1+0/1*w)*U5*U8*U9+(8/1+0/1*w)*U8^2*U9"),
    (21, "(1/1-1/1*w)*U1^2*U3+(-4/1+0/1*w)*U0*U1*U5+(-8/1+0/1*w)*U3*U4*U6+(-8/1+0/1*w)*U0*U6^2+(4/1+0/1*w)*U1*U4*U7+(2/1-2/1*w)*U2*U5*U7+(2/1+0/1*w)*U1*U7^2+(-2/1+0/1*w)*U0*U1*U8+(1/1+1/1*w)*U3^2*U8+(1/1-1/1*w)*U2*U7*U8+(-1/1+1/1*w)*U3*U7*U9"),
    (22, "(-8/1+0/1*w)*U1^2*U3+(16/1+0/1*w)*U2*U4*U5+(-8/1+0/1*w)*U1*U2*U6+(4/1+4/1*w)*U0*U6^2+(1/1+1/1*w)*U0*U1*U8+(8/1+0/1*w)*U2*U4*U8+(-8/1+0/1*w)*U5*U6*U8+(4/1+0/1*w)*U1*U2*U9+(-8/1+0/1*w)*U3*U4*U9+(2/1+2/1*w)*U0*U6*U9"),
    (23, "(-3/1+1/1*w)*U2^3+(-3/1+1/1*w)*U1^2*U3+(-4/1-4/1*w)*U1*U4^2+(-1/1+3/1*w)*U1*U2*U6+(-2/1-2/1*w)*U1*U4*U7+(1/1+1/1*w)*U3^2*U8+(8/1+0/1*w)*U2*U4*U8+(-4/1+4/1*w)*U5*U6*U8+(4/1+0/1*w)*U2*U7*U8+(4/1+0/1*w)*U1*U2*U9"),
    (24, "(2/1+0/1*w)*U0*U2*U3+(-1/1-1/1*w)*U0^2*U4+(2/1-2/1*w)*U0*U1*U5+(2/1-2/1*w)*U1*U2*U6+(2/1+0/1*w)*U0*U1*U8+(-4/1+0/1*w)*U3^2*U8+(-4/1+0/1*w)*U2*U4*U8+(2/1-2/1*w)*U5*U6*U8+(4/1+0/1*w)*U5*U8*U9+(2/1+0/1*w)*U8^2*U9"),
    (25, "(-1/1+3/1*w)*U0^2*U1+(44/1-4/1*w)*U2^2*U3+(64/1+0/1*w)*U3*U4*U5+(36/1-12/1*w)*U1*U3*U6+(16/1+16/1*w)*U4^2*U6+(-4/1-4/1*w)*U0*U2*U7+(-32/1+0/1*w)*U3*U4*U8+(4/1+4/1*w)*U0*U6*U8+(-16/1+0/1*w)*U3*U7*U8+(8/1-8/1*w)*U1*U3*U9+(16/1+0/1*w)*U4*U7*U9"),
    (26, "(-1/1+3/1*w)*U0^2*U1+(-4/1-4/1*w)*U2^2*U3+(40/1-8/1*w)*U1*U2*U5+(4/1-12/1*w)*U1*U3*U6+(96/1+0/1*w)*U4^2*U6+(-24/1-8/1*w)*U2*U6^2+(16/1+0/1*w)*U1^2*U7+(-2/1+2/1*w)*U0*U2*U7+(64/1+0/1*w)*U4*U6*U7+(20/1-4/1*w)*U1*U2*U8+(-8/1+0/1*w)*U0*U6*U8+(16/1+0/1*w)*U4*U7*U9"),
    (27, "(5/1+1/1*w)*U0^2*U1+(-4/1-4/1*w)*U2^2*U3+(16/1-16/1*w)*U3*U4*U5+(-20/1-4/1*w)*U1*U3*U6+(32/1+0/1*w)*U4^2*U6+(32/1+0/1*w)*U0*U5*U6+(8/1+0/1*w)*U0*U6*U8+(-16/1+0/1*w)*U1*U3*U9+(16/1+0/1*w)*U0*U5*U9+(8/1+0/1*w)*U0*U8*U9"),
    (28, "(8/1+0/1*w)*U2^2*U3+(-3/1+1/1*w)*U0*U3^2+(-4/1-4/1*w)*U1*U2*U5+(4/1+4/1*w)*U3*U4*U5+(32/1+0/1*w)*U5^3+(4/1+4/1*w)*U3*U5*U7+(16/1+0/1*w)*U5^2*U8+(3/1-1/1*w)*U1*U3*U9+(8/1+0/1*w)*U2*U6*U9"),
    (29, "(-3/1+1/1*w)*U2^2*U3+(5/1+1/1*w)*U0*U2*U4+(8/1+0/1*w)*U1*U2*U5+(-8/1+0/1*w)*U2*U6^2+(2/1+0/1*w)*U0*U2*U7+(-1/1-1/1*w)*U1*U2*U8+(8/1+0/1*w)*U5^2*U8+(3/1-1/1*w)*U1*U3*U9+(4/1+4/1*w)*U4^2*U9+(-8/1+0/1*w)*U2*U6*U9+(2/1+2/1*w)*U4*U7*U9+(-2/1+0/1*w)*U0*U8*U9+(-3/1+1/1*w)*U2*U9^2"),
    (30, "(8/1+0/1*w)*U2^2*U3+(4/1-4/1*w)*U1^2*U4+(-12/1-4/1*w)*U1*U2*U5+(-4/1-12/1*w)*U4^2*U6+(12/1+4/1*w)*U2*U6^2+(2/1-2/1*w)*U1^2*U7+(-8/1+0/1*w)*U1*U2*U8+(-16/1+0/1*w)*U3*U4*U8+(1/1+3/1*w)*U0*U6*U8+(-3/1-1/1*w)*U3*U7*U8+(4/1+0/1*w)*U1*U3*U9+(6/1+2/1*w)*U2*U6*U9"),
    (31, "(-4/1+4/1*w)*U1^2*U4+(-4/1+0/1*w)*U1*U2*U5+(-4/1+4/1*w)*U3*U4*U5+(16/1+0/1*w)*U5^3+(-8/1+8/1*w)*U4^2*U6+(2/1+2/1*w)*U0*U5*U6+(-4/1+0/1*w)*U1^2*U7+(2/1+2/1*w)*U6*U7^2+(8/1+0/1*w)*U3*U4*U8+(-4/1+0/1*w)*U0*U6*U8+(-4/1+0/1*w)*U5*U8^2+(1/1+1/1*w)*U7^2*U9"),
    (32, "(-5/1-1/1*w)*U0^2*U1+(-6/1+2/1*w)*U0*U3^2+(-24/1+8/1*w)*U3*U4*U5+(20/1+4/1*w)*U1*U3*U6+(-32/1+0/1*w)*U4^2*U6+(-32/1+0/1*w)*U0*U5*U6+(32/1+0/1*w)*U2*U6^2+(2/1+2/1*w)*U0*U2*U7+(4/1+4/1*w)*U1*U2*U8+(-8/1+0/1*w)*U0*U6*U8+(10/1+2/1*w)*U1*U3*U9+(16/1+0/1*w)*U2*U6*U9"),
    (33, "(7/1-5/1*w)*U0^2*U1+(-56/1-24/1*w)*U1^2*U4+(0/1+32/1*w)*U1*U2*U5+(28/1+4/1*w)*U1*U3*U6+(28/1+28/1*w)*U0*U5*U6+(-84/1-4/1*w)*U1^2*U7+(7/1+7/1*w)*U0*U2*U7+(-56/1+0/1*w)*U3*U5*U7+(56/1+0/1*w)*U6*U7^2+(0/1+24/1*w)*U1*U2*U8+(56/1+0/1*w)*U0*U6*U8+(14/1-18/1*w)*U1*U3*U9+(28/1+0/1*w)*U7^2*U9"),
    (34, "(-5/1-1/1*w)*U0^2*U1+(48/1+0/1*w)*U1*U2*U5+(-16/1-16/1*w)*U3*U4*U5+(32/1+0/1*w)*U4^2*U6+(2/1+10/1*w)*U1^2*U7+(-48/1+16/1*w)*U4*U6*U7+(28/1-4/1*w)*U1*U2*U8+(-12/1-12/1*w)*U3*U4*U8+(-16/1-8/1*w)*U0*U6*U8+(-22/1+2/1*w)*U1*U3*U9+(-8/1-8/1*w)*U2*U6*U9+(-8/1+8/1*w)*U4*U7*U9"),
    (35, "(10/1+2/1*w)*U2^2*U3+(-11/1+1/1*w)*U0*U2*U4+(-16/1+0/1*w)*U1*U2*U5+(20/1+4/1*w)*U3*U4*U5+(-16/1+0/1*w)*U2*U6^2+(-1/1-1/1*w)*U0*U2*U7+(-2/1-2/1*w)*U1*U2*U8+(-16/1+0/1*w)*U5^2*U8+(-4/1-4/1*w)*U4^2*U9+(3/1-1/1*w)*U2*U9^2"),
    (36, "(2/1+2/1*w)*U0*U3^2+(-6/1+2/1*w)*U0*U2*U4+(4/1-4/1*w)*U1*U3*U6+(32/1+0/1*w)*U4^2*U6+(-12/1-4/1*w)*U2*U6^2+(2/1+0/1*w)*U0*U2*U7+(16/1+0/1*w)*U4*U6*U7+(7/1-1/1*w)*U1*U2*U8+(-8/1+0/1*w)*U5^2*U8+(4/1+0/1*w)*U1*U3*U9+(4/1-4/1*w)*U0*U5*U9+(4/1+0/1*w)*U4*U7*U9+(0/1-2/1*w)*U0*U8*U9"),
];

/// The six printed quadrics of the curve C; with U0 and their g₃-orbits they cut out C.
pub const CURVE_C_QUADRICS: [&str; 6] = [
    "(1/1+0/1*w)*U1^2+(-1/1+0/1*w)*U6*U7+(-5/8-1/8*w)*U7*U9",
    "(1/1+0/1*w)*U4*U6+(-1/8-1/8*w)*U3*U8",
    "(1/1+0/1*w)*U2*U4+(1/8+1/8*w)*U8*U9",
    "(1/1+0/1*w)*U1*U4+(1/1+0/1*w)*U3*U6+(5/8+1/8*w)*U3*U9",
    "(1/1+0/1*w)*U1*U2+(1/1+0/1*w)*U5*U8",
    "(1/1+0/1*w)*U4^2+(5/8+1/8*w)*U4*U7+(1/8+1/8*w)*U2*U9",
];

/// The sextic f(y0,y1,y2,y3).
pub const SEXTIC: &str = "(28/1+0/1*w)*y0^6+(-42/1+2/1*w)*y0^4*y1^2+(0/1-4/1*w)*y0^2*y1^4+(14/1+2/1*w)*y1^6+(-42/1-2/1*w)*y0^3*y1^2*y2+(42/1+2/1*w)*y0*y1^4*y2+(56/1+0/1*w)*y0^2*y1^2*y2^2+(28/1+4/1*w)*y1^4*y2^2+(42/1+2/1*w)*y0*y1^2*y2^3+(14/1+2/1*w)*y1^2*y2^4+(-14/1-22/1*w)*y0^4*y1*y3+(42/1+2/1*w)*y0^2*y1^3*y3+(-28/1+20/1*w)*y1^5*y3+(21/1-31/1*w)*y0^3*y1*y2*y3+(-21/1+31/1*w)*y0*y1^3*y2*y3+(-28/1+20/1*w)*y1^3*y2^2*y3+(-7/1+13/1*w)*y0^2*y1^2*y3^2+(-77/1-17/1*w)*y1^4*y3^2+(-42/1-2/1*w)*y0*y1^2*y2*y3^2+(-28/1-4/1*w)*y1^2*y2^2*y3^2+(28/1-20/1*w)*y1^3*y3^3+(14/1+2/1*w)*y1^2*y3^4";

/// The conic h0 in y1,y2,y3.
pub const CONIC_H0: &str = "(1/1+0/1*w)*y1^2+(1/1+0/1*w)*y2^2+(-1/4+3/4*w)*y1*y3+(-1/1+0/1*w)*y3^2";

/// Conic component of the image of A1'.
pub const CONIC_A1P: &str =
    "(11/2-1/2*w)*y1^2+(11/4-1/4*w)*y1*y2+(1/1+0/1*w)*y2^2+(-1/2+3/2*w)*y1*y3+(-1/1+0/1*w)*y3^2";

/// First cubic cone, vertex (0:0:1:1).
pub const CONE_1: &str = "(1/1+0/1*w)*y0^3+(-1/1+0/1*w)*y0^2*y1+(-1/1+0/1*w)*y0*y1^2+(1/1+0/1*w)*y1^3+(1/2+1/2*w)*y0*y1*y2+(-1/2-1/2*w)*y1^2*y2+(-1/4+1/4*w)*y1*y2^2+(-1/2-1/2*w)*y0*y1*y3+(1/2+1/2*w)*y1^2*y3+(1/2-1/2*w)*y1*y2*y3+(-1/4+1/4*w)*y1*y3^2";

/// Second cubic cone, the σ-image of the first.
pub const CONE_2: &str = "(1/1+0/1*w)*y0^3+(1/1+0/1*w)*y0^2*y1+(-1/1+0/1*w)*y0*y1^2+(-1/1+0/1*w)*y1^3+(-1/2-1/2*w)*y0*y1*y2+(-1/2-1/2*w)*y1^2*y2+(1/4-1/4*w)*y1*y2^2+(-1/2-1/2*w)*y0*y1*y3+(-1/2-1/2*w)*y1^2*y3+(1/2-1/2*w)*y1*y2*y3+(1/4-1/4*w)*y1*y3^2";

/// Parametrization of the image of S1' in t.
pub const CURVE_S1P: [&str; 4] = [
    "(-3/8+1/8*w)*t^3+(11/8-1/8*w)*t",
    "(1/1+0/1*w)*t^3",
    "(3/8-1/8*w)*t^3+(-5/8-1/8*w)*t^2+(-1/8+3/8*w)*t+(11/8-1/8*w)",
    "(-7/16+5/16*w)*t^3+(21/16+1/16*w)*t^2+(11/16-1/16*w)*t+(-9/16-5/16*w)",
];

/// Parametrization of the image of S1'' in t.
pub const CURVE_S1PP: [&str; 4] = [
    "(-3/8+1/8*w)*t^3+(11/8-1/8*w)*t",
    "(1/1+0/1*w)*t^3",
    "(11/16-1/16*w)*t^3+(-9/16-5/16*w)*t^2+(-11/16+1/16*w)*t+(9/16+5/16*w)",
    "(-1/8+3/8*w)*t^3+(11/8-1/8*w)*t^2+(1/8-3/8*w)*t+(-11/8+1/8*w)",
];

/// Image point of C1.
pub const POINT_C1: [&str; 4] = ["(1/1+0/1*w)", "(1/1+0/1*w)", "(-3/4-1/4*w)", "(3/4+1/4*w)"];

/// Image point of B1' (= image of C1').
pub const POINT_B1P: [&str; 4] = ["(-1/1+0/1*w)", "(-1/1+0/1*w)", "(1/2-1/2*w)", "(1/2-1/2*w)"];

/// Numerator and denominator of a rational function of the chart coordinates Y0, Y2, Y3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalText {
    pub num: &'static str,
    pub den: &'static str,
}

/// Y2' of the order-three automorphism.
pub const MAP_Y2P: RationalText = RationalText {
    num: "(434/1-42/1*w)*Y0^4*Y3+(560/1+144/1*w)*Y0^2*Y2^2+(-154/1+114/1*w)*Y0*Y2^3+(154/1-114/1*w)*Y0*Y2*Y3^2+(-196/1+52/1*w)*Y0^2*Y3+(-672/1+32/1*w)*Y0*Y2*Y3+(-238/1-10/1*w)*Y2^2*Y3+(238/1+10/1*w)*Y3^3+(112/1-176/1*w)*Y3^2+(-238/1-10/1*w)*Y3",
    den: "(-168/1-248/1*w)*Y0*Y2^2+(-280/1-72/1*w)*Y0*Y3^2",
};

/// Y3' of the order-three automorphism.
pub const MAP_Y3P: RationalText = RationalText {
    num: "(70/1-238/1*w)*Y0^4*Y2+(-112/1+176/1*w)*Y0^2*Y2*Y3+(-238/1-10/1*w)*Y0*Y2^2*Y3+(238/1+10/1*w)*Y0*Y3^3+(84/1+124/1*w)*Y0^2*Y2+(560/1+144/1*w)*Y0*Y2^2+(-154/1+114/1*w)*Y2^3+(112/1-176/1*w)*Y0*Y3^2+(154/1-114/1*w)*Y2*Y3^2+(-560/1-144/1*w)*Y2*Y3+(-154/1+114/1*w)*Y2",
    den: "(-168/1-248/1*w)*Y0*Y2^2+(-280/1-72/1*w)*Y0*Y3^2",
};

/// Y2'' of the inverse automorphism.
pub const MAP_Y2PP: RationalText = RationalText {
    num: "(0/1+8/1*w)*Y0^6*Y3+(-7/1-5/1*w)*Y0^4*Y2^2*Y3+(7/1+5/1*w)*Y0^4*Y3^3+(-20/1-4/1*w)*Y0^6+(-36/1-4/1*w)*Y0^5*Y2+(-48/1+16/1*w)*Y0^4*Y2^2+(6/1+10/1*w)*Y0^3*Y2^3+(16/1+0/1*w)*Y0^2*Y2^4+(5/1-1/1*w)*Y0*Y2^5+(12/1-4/1*w)*Y0^4*Y3^2+(-32/1+4/1*w)*Y0^3*Y2*Y3^2+(-16/1+0/1*w)*Y0^2*Y2^2*Y3^2+(-10/1+2/1*w)*Y0*Y2^3*Y3^2+(5/1-1/1*w)*Y0*Y2*Y3^4+(18/1+2/1*w)*Y0^4*Y3+(-10/1+30/1*w)*Y0^3*Y2*Y3+(-34/1-2/1*w)*Y0^2*Y2^2*Y3+(-1/1-3/1*w)*Y2^4*Y3+(16/1-8/1*w)*Y0^2*Y3^3+(2/1+6/1*w)*Y2^2*Y3^3+(-1/1-3/1*w)*Y3^5+(20/1+4/1*w)*Y0^4+(72/1+8/1*w)*Y0^3*Y2+(-26/1-14/1*w)*Y0*Y2^3+(-20/1-4/1*w)*Y2^4+(-58/1-18/1*w)*Y0^2*Y3^2+(52/1+0/1*w)*Y0*Y2*Y3^2+(68/1+4/1*w)*Y2^2*Y3^2+(-48/1+0/1*w)*Y3^4+(-52/1+20/1*w)*Y0^2*Y3+(10/1-30/1*w)*Y0*Y2*Y3+(33/1-33/1*w)*Y2^2*Y3+(-15/1+43/1*w)*Y3^3+(20/1+4/1*w)*Y0^2+(-36/1-4/1*w)*Y0*Y2+(-40/1-8/1*w)*Y2^2+(134/1+14/1*w)*Y3^2+(34/1-30/1*w)*Y3+(-20/1-4/1*w)",
    den: "(-4/1+12/1*w)*Y0^5+(24/1-8/1*w)*Y0^3*Y2^2+(-8/1+0/1*w)*Y0*Y2^4+(16/1+16/1*w)*Y0^3*Y3^2+(-4/1-4/1*w)*Y0*Y2^2*Y3^2+(12/1+4/1*w)*Y0*Y3^4+(88/1-8/1*w)*Y0^3*Y3+(-48/1+16/1*w)*Y0*Y2^2*Y3+(48/1-16/1*w)*Y0*Y3^3+(8/1-24/1*w)*Y0^3+(12/1+28/1*w)*Y0*Y2^2+(-52/1-36/1*w)*Y0*Y3^2+(-88/1+8/1*w)*Y0*Y3+(-4/1+12/1*w)*Y0",
};

/// Y3'' of the inverse automorphism.
pub const MAP_Y3PP: RationalText = RationalText {
    num: "(0/1+8/1*w)*Y0^6*Y2+(7/1-3/1*w)*Y0^4*Y2^3+(-7/1+3/1*w)*Y0^4*Y2*Y3^2+(26/1+2/1*w)*Y0^5*Y3+(-12/1+4/1*w)*Y0^4*Y2*Y3+(4/1-8/1*w)*Y0^3*Y2^2*Y3+(8/1-8/1*w)*Y0^2*Y2^3*Y3+(-1/1-3/1*w)*Y0*Y2^4*Y3+(22/1-6/1*w)*Y0^3*Y3^3+(-8/1+8/1*w)*Y0^2*Y2*Y3^3+(2/1+6/1*w)*Y0*Y2^2*Y3^3+(-1/1-3/1*w)*Y0*Y3^5+(-40/1-8/1*w)*Y0^5+(0/1-8/1*w)*Y0^4*Y2+(-32/1-8/1*w)*Y0^2*Y2^3+(-4/1-4/1*w)*Y0*Y2^4+(5/1-1/1*w)*Y2^5+(-78/1-22/1*w)*Y0^3*Y3^2+(50/1+18/1*w)*Y0^2*Y2*Y3^2+(52/1+4/1*w)*Y0*Y2^2*Y3^2+(-10/1+2/1*w)*Y2^3*Y3^2+(-48/1+0/1*w)*Y0*Y3^4+(5/1-1/1*w)*Y2*Y3^4+(-68/1+44/1*w)*Y0^3*Y3+(66/1-6/1*w)*Y0^2*Y2*Y3+(-12/1-32/1*w)*Y0*Y2^2*Y3+(-8/1+8/1*w)*Y2^3*Y3+(-14/1+46/1*w)*Y0*Y3^3+(8/1-8/1*w)*Y2*Y3^3+(80/1+16/1*w)*Y0^3+(0/1-8/1*w)*Y0^2*Y2+(-88/1+8/1*w)*Y0*Y2^2+(5/1+7/1*w)*Y2^3+(166/1+14/1*w)*Y0*Y3^2+(-23/1-17/1*w)*Y2*Y3^2+(42/1-46/1*w)*Y0*Y3+(-54/1+2/1*w)*Y2*Y3+(-40/1-8/1*w)*Y0+(0/1+8/1*w)*Y2",
    den: "(-4/1+12/1*w)*Y0^5+(24/1-8/1*w)*Y0^3*Y2^2+(-8/1+0/1*w)*Y0*Y2^4+(16/1+16/1*w)*Y0^3*Y3^2+(-4/1-4/1*w)*Y0*Y2^2*Y3^2+(12/1+4/1*w)*Y0*Y3^4+(88/1-8/1*w)*Y0^3*Y3+(-48/1+16/1*w)*Y0*Y2^2*Y3+(48/1-16/1*w)*Y0*Y3^3+(8/1-24/1*w)*Y0^3+(12/1+28/1*w)*Y0*Y2^2+(-52/1-36/1*w)*Y0*Y3^2+(-88/1+8/1*w)*Y0*Y3+(-4/1+12/1*w)*Y0",
};

/// w = z^7.
pub const Z_SEVENTH_POWER: RationalText = RationalText {
    num: "(4005191221248/1-4189337944064/1*w)*Y0^22+(-16204911607808/1+11995843657728/1*w)*Y0^20*Y3+(-47983374630912/1-9259949490176/1*w)*Y0^19*Y2*Y3+(-11647280218112/1+22091030069248/1*w)*Y0^20+(37907918225408/1-4971961516032/1*w)*Y0^18*Y2^2+(2151510179840/1-1542698565632/1*w)*Y0^16*Y2^4+(29437168975872/1-8497055924224/1*w)*Y0^18*Y3^2+(67345087201280/1+17317308137472/1*w)*Y0^17*Y2*Y3^2+(-52647172243456/1+19681150763008/1*w)*Y0^16*Y2^2*Y3^2+(4316173697024/1-2745289408512/1*w)*Y0^16*Y3^4+(21045339750400/1-71554155151360/1*w)*Y0^18*Y3+(205402515963904/1+15874199126016/1*w)*Y0^17*Y2*Y3+(-1894080577536/1+12597139079168/1*w)*Y0^16*Y2^2*Y3+(-10101763080192/1-14912126451712/1*w)*Y0^15*Y2^3*Y3+(-20353850015744/1+1473173782528/1*w)*Y0^14*Y2^4*Y3+(-5652176961536/1-5411658792960/1*w)*Y0^13*Y2^5*Y3+(-51981989183488/1+10492605104128/1*w)*Y0^16*Y3^3+(-12987981103104/1+7215545057280/1*w)*Y0^15*Y2*Y3^3+(19542101196800/1-4870492913664/1*w)*Y0^14*Y2^2*Y3^3+(11304353923072/1+10823317585920/1*w)*Y0^13*Y2^3*Y3^3+(811748818944/1+3397319131136/1*w)*Y0^14*Y3^5+(-5652176961536/1-5411658792960/1*w)*Y0^13*Y2*Y3^5+(-12896847265792/1-41005529169920/1*w)*Y0^18+(-144186883964928/1+27670863675392/1*w)*Y0^16*Y2^2+(11375757754368/1+8271570141184/1*w)*Y0^14*Y2^4+(3100429516800/1+1003411734528/1*w)*Y0^12*Y2^6+(938584571904/1+79859548160/1*w)*Y0^10*Y2^8+(-57006564048896/1+65289408479232/1*w)*Y0^16*Y3^2+(-271304494153728/1-75041668595712/1*w)*Y0^15*Y2*Y3^2+(199968308592640/1-102648644632576/1*w)*Y0^14*Y2^2*Y3^2+(38482906972160/1-7696581394432/1*w)*Y0^13*Y2^3*Y3^2+(-16757351776256/1-2288680697856/1*w)*Y0^12*Y2^4*Y3^2+(-3754338287616/1-319438192640/1*w)*Y0^10*Y2^6*Y3^2+(23401666183168/1-1830192939008/1*w)*Y0^14*Y3^4+(-38482906972160/1+7696581394432/1*w)*Y0^13*Y2*Y3^4+(24213415002112/1+1567126192128/1*w)*Y0^12*Y2^2*Y3^4+(5631507431424/1+479157288960/1*w)*Y0^10*Y2^4*Y3^4+(-10556492742656/1-281857228800/1*w)*Y0^12*Y3^6+(-3754338287616/1-319438192640/1*w)*Y0^10*Y2^2*Y3^6+(938584571904/1+79859548160/1*w)*Y0^10*Y3^8+(155945967550464/1+153240138153984/1*w)*Y0^16*Y3+(-294394238337024/1+40407052320768/1*w)*Y0^15*Y2*Y3+(16956530884608/1-45337674776576/1*w)*Y0^14*Y2^2*Y3+(52913997086720/1+66383014526976/1*w)*Y0^13*Y2^3*Y3+(95335389069312/1+2194728288256/1*w)*Y0^12*Y2^4*Y3+(28260884807680/1+27058293964800/1*w)*Y0^11*Y2^5*Y3+(-2615635083264/1+2735894167552/1*w)*Y0^10*Y2^6*Y3+(146595823747072/1-79731772882944/1*w)*Y0^14*Y3^3+(85624468013056/1-20203526160384/1*w)*Y0^13*Y2*Y3^3+(-88691074662400/1-6313601925120/1*w)*Y0^12*Y2^2*Y3^3+(-56521769615360/1-54116587929600/1*w)*Y0^11*Y2^3*Y3^3+(7846905249792/1-8207682502656/1*w)*Y0^10*Y2^4*Y3^3+(-6644314406912/1+4118873636864/1*w)*Y0^12*Y3^5+(28260884807680/1+27058293964800/1*w)*Y0^11*Y2*Y3^5+(-7846905249792/1+8207682502656/1*w)*Y0^10*Y2^2*Y3^5+(2615635083264/1-2735894167552/1*w)*Y0^10*Y3^7+(87094823223296/1+20014681817088/1*w)*Y0^16+(174841676169216/1-61858266480640/1*w)*Y0^14*Y2^2+(-77698642739200/1-16749835583488/1*w)*Y0^12*Y2^4+(-11747809296384/1-4697620480000/1*w)*Y0^10*Y2^6+(-4692922859520/1-399297740800/1*w)*Y0^8*Y2^8+(-210919401455616/1-154127048900608/1*w)*Y0^14*Y3^2+(367511761584128/1+117372866265088/1*w)*Y0^13*Y2*Y3^2+(-316980397604864/1+217255551959040/1*w)*Y0^12*Y2^2*Y3^2+(-192414534860800/1+38482906972160/1*w)*Y0^11*Y2^3*Y3^2+(51959440605184/1+6516539129856/1*w)*Y0^10*Y2^4*Y3^2+(18771691438080/1+1597190963200/1*w)*Y0^8*Y2^6*Y3^2+(-55570971230208/1+49633178943488/1*w)*Y0^12*Y3^4+(192414534860800/1-38482906972160/1*w)*Y0^11*Y2*Y3^4+(-68675453321216/1+1059783180288/1*w)*Y0^10*Y2^2*Y3^4+(-28157537157120/1-2395786444800/1*w)*Y0^8*Y2^4*Y3^4+(28463822012416/1-2878701830144/1*w)*Y0^10*Y3^6+(18771691438080/1+1597190963200/1*w)*Y0^8*Y2^2*Y3^6+(-4692922859520/1-399297740800/1*w)*Y0^8*Y3^8+(-476225973780480/1-104865921499136/1*w)*Y0^14*Y3+(78408922955776/1-118815975276544/1*w)*Y0^13*Y2*Y3+(-54116587929600/1+60851096649728/1*w)*Y0^12*Y2^2*Y3+(-113043539230720/1-108233175859200/1*w)*Y0^11*Y2^3*Y3+(-179216100360192/1-24863565676544/1*w)*Y0^10*Y2^4*Y3+(-56521769615360/1-54116587929600/1*w)*Y0^9*Y2^5*Y3+(13078175416320/1-13679470837760/1*w)*Y0^8*Y2^6*Y3+(32950989094912/1+183515362623488/1*w)*Y0^12*Y3^3+(-233302623518720/1-7215545057280/1*w)*Y0^11*Y2*Y3^3+(183334973997056/1+78589311582208/1*w)*Y0^10*Y2^2*Y3^3+(113043539230720/1+108233175859200/1*w)*Y0^9*Y2^3*Y3^3+(-39234526248960/1+41038412513280/1*w)*Y0^8*Y2^4*Y3^3+(-4118873636864/1-53725745905664/1*w)*Y0^10*Y3^5+(-56521769615360/1-54116587929600/1*w)*Y0^9*Y2*Y3^5+(39234526248960/1-41038412513280/1*w)*Y0^8*Y2^2*Y3^5+(-13078175416320/1+13679470837760/1*w)*Y0^8*Y3^7+(-110332072689664/1+32246346022912/1*w)*Y0^14+(-24577950351360/1+68171868405760/1*w)*Y0^12*Y2^2+(148185498517504/1+14149232885760/1*w)*Y0^10*Y2^4+(12232603729920/1+8436926382080/1*w)*Y0^8*Y2^6+(9385845719040/1+798595481600/1*w)*Y0^6*Y2^8+(776918781657088/1+95380486225920/1*w)*Y0^12*Y3^2+(-125069447659520/1-67345087201280/1*w)*Y0^11*Y2*Y3^2+(375636765966336/1-244283781152768/1*w)*Y0^10*Y2^2*Y3^2+(384829069721600/1-76965813944320/1*w)*Y0^9*Y2^3*Y3^2+(-8436926382080/1+1747514818560/1*w)*Y0^8*Y2^4*Y3^2+(-37543382876160/1-3194381926400/1*w)*Y0^6*Y2^6*Y3^2+(-165931229642752/1-112363323785216/1*w)*Y0^10*Y3^4+(-384829069721600/1+76965813944320/1*w)*Y0^9*Y2*Y3^4+(-19823958425600/1-28805808783360/1*w)*Y0^8*Y2^2*Y3^4+(56315074314240/1+4791572889600/1*w)*Y0^6*Y2^4*Y3^4+(16028281077760/1+18621367582720/1*w)*Y0^8*Y3^6+(-37543382876160/1-3194381926400/1*w)*Y0^6*Y2^2*Y3^6+(9385845719040/1+798595481600/1*w)*Y0^6*Y3^8+(448385995767808/1-96026878803968/1*w)*Y0^12*Y3+(193617125703680/1+80573586472960/1*w)*Y0^11*Y2*Y3+(74680891342848/1-56882546868224/1*w)*Y0^10*Y2^2*Y3+(125069447659520/1+67345087201280/1*w)*Y0^9*Y2^3*Y3+(178434416312320/1+39835821670400/1*w)*Y0^8*Y2^4*Y3+(56521769615360/1+54116587929600/1*w)*Y0^7*Y2^5*Y3+(-26156350832640/1+27358941675520/1*w)*Y0^6*Y2^6*Y3+(-519158466871296/1-106669807763456/1*w)*Y0^10*Y3^3+(336725436006400/1+86586540687360/1*w)*Y0^9*Y2*Y3^3+(-270282291937280/1-127775277056000/1*w)*Y0^8*Y2^2*Y3^3+(-113043539230720/1-108233175859200/1*w)*Y0^7*Y2^3*Y3^3+(78469052497920/1-82076825026560/1*w)*Y0^6*Y2^4*Y3^3+(91847875624960/1+87939455385600/1*w)*Y0^8*Y3^5+(56521769615360/1+54116587929600/1*w)*Y0^7*Y2*Y3^5+(-78469052497920/1+82076825026560/1*w)*Y0^6*Y2^2*Y3^5+(26156350832640/1-27358941675520/1*w)*Y0^6*Y3^7+(12535130488832/1-45313247150080/1*w)*Y0^12+(-102994389499904/1-33108829143040/1*w)*Y0^10*Y2^2+(-124205085491200/1-1014686023680/1*w)*Y0^8*Y2^4+(6539087708160/1-6839735418880/1*w)*Y0^6*Y2^6+(-9385845719040/1-798595481600/1*w)*Y0^4*Y2^8+(-810493614751744/1+140379932327936/1*w)*Y0^10*Y3^2+(-105827994173440/1-9620726743040/1*w)*Y0^9*Y2*Y3^2+(-437066609459200/1+177607635107840/1*w)*Y0^8*Y2^2*Y3^2+(-384829069721600/1+76965813944320/1*w)*Y0^7*Y2^3*Y3^2+(-150699664998400/1-26381836615680/1*w)*Y0^6*Y2^4*Y3^2+(37543382876160/1+3194381926400/1*w)*Y0^4*Y2^6*Y3^2+(542030241464320/1+73545946234880/1*w)*Y0^8*Y3^4+(384829069721600/1-76965813944320/1*w)*Y0^7*Y2*Y3^4+(281782066872320/1+73282879488000/1*w)*Y0^6*Y2^2*Y3^4+(-56315074314240/1-4791572889600/1*w)*Y0^4*Y2^4*Y3^4+(-137621489582080/1-40061307453440/1*w)*Y0^6*Y3^6+(37543382876160/1+3194381926400/1*w)*Y0^4*Y2^2*Y3^6+(-9385845719040/1-798595481600/1*w)*Y0^4*Y3^8+(9380208574464/1+189768835006464/1*w)*Y0^10*Y3+(-172692045037568/1+20684562497536/1*w)*Y0^9*Y2*Y3+(-22548578304000/1+76665166233600/1*w)*Y0^8*Y2^2*Y3+(-74560632258560/1+7215545057280/1*w)*Y0^7*Y2^3*Y3+(-115899692482560/1-6163278069760/1*w)*Y0^6*Y2^4*Y3+(-28260884807680/1-27058293964800/1*w)*Y0^5*Y2^5*Y3+(26156350832640/1-27358941675520/1*w)*Y0^4*Y2^6*Y3+(609412909629440/1-163251706920960/1*w)*Y0^8*Y3^3+(-271785530490880/1-122664265973760/1*w)*Y0^7*Y2*Y3^3+(337627379138560/1+21947282882560/1*w)*Y0^6*Y2^2*Y3^3+(56521769615360/1+54116587929600/1*w)*Y0^5*Y2^3*Y3^3+(-78469052497920/1+82076825026560/1*w)*Y0^4*Y2^4*Y3^3+(-221727686656000/1-15784004812800/1*w)*Y0^6*Y3^5+(-28260884807680/1-27058293964800/1*w)*Y0^5*Y2*Y3^5+(78469052497920/1-82076825026560/1*w)*Y0^4*Y2^2*Y3^5+(-26156350832640/1+27358941675520/1*w)*Y0^4*Y3^7+(74171669282816/1+9115262779392/1*w)*Y0^10+(80866717990912/1-2487859806208/1*w)*Y0^8*Y2^2+(50302120099840/1-5550708359168/1*w)*Y0^6*Y2^4+(-22041235292160/1+1822676746240/1*w)*Y0^4*Y2^6+(4692922859520/1+399297740800/1*w)*Y0^2*Y2^8+(62241592311808/1-237789790601216/1*w)*Y0^8*Y3^2+(48103633715200/1+21165598834688/1*w)*Y0^7*Y2*Y3^2+(280857575161856/1-122145648672768/1*w)*Y0^6*Y2^2*Y3^2+(192414534860800/1-38482906972160/1*w)*Y0^5*Y2^3*Y3^2+(234486423879680/1+37825240104960/1*w)*Y0^4*Y2^4*Y3^2+(-18771691438080/1-1597190963200/1*w)*Y0^2*Y2^6*Y3^2+(-458153288269824/1+54578833784832/1*w)*Y0^6*Y3^4+(-192414534860800/1+38482906972160/1*w)*Y0^5*Y2*Y3^4+(-402849141882880/1-81118510448640/1*w)*Y0^4*Y2^2*Y3^4+(28157537157120/1+2395786444800/1*w)*Y0^2*Y2^4*Y3^4+(190403953295360/1+41470593597440/1*w)*Y0^4*Y3^6+(-18771691438080/1-1597190963200/1*w)*Y0^2*Y2^2*Y3^6+(4692922859520/1+399297740800/1*w)*Y0^2*Y3^8+(-269680996515840/1-68247030333440/1*w)*Y0^8*Y3+(18279380811776/1-37520834297856/1*w)*Y0^7*Y2*Y3+(-61692910239744/1-73478300499968/1*w)*Y0^6*Y2^2*Y3+(22127671508992/1-25975962206208/1*w)*Y0^5*Y2^3*Y3+(66653597466624/1-35747012804608/1*w)*Y0^4*Y2^4*Y3+(5652176961536/1+5411658792960/1*w)*Y0^3*Y2^5*Y3+(-13078175416320/1+13679470837760/1*w)*Y0^2*Y2^6*Y3+(-124949188575232/1+252423817920512/1*w)*Y0^6*Y3^3+(116410793590784/1+72155450572800/1*w)*Y0^5*Y2*Y3^3+(-304556130959360/1+111901077929984/1*w)*Y0^4*Y2^2*Y3^3+(-11304353923072/1-10823317585920/1*w)*Y0^3*Y2^3*Y3^3+(39234526248960/1-41038412513280/1*w)*Y0^2*Y2^4*Y3^3+(237902533492736/1-76154065125376/1*w)*Y0^4*Y3^5+(5652176961536/1+5411658792960/1*w)*Y0^3*Y2*Y3^5+(-39234526248960/1+41038412513280/1*w)*Y0^2*Y2^2*Y3^5+(13078175416320/1-13679470837760/1*w)*Y0^2*Y3^7+(-44681886957568/1+14534437765120/1*w)*Y0^8+(-31222264758272/1+10718090887168/1*w)*Y0^6*Y2^2+(-21184389316608/1+1988032987136/1*w)*Y0^4*Y2^4+(15671261921280/1+593779228672/1*w)*Y0^2*Y2^6+(-938584571904/1-79859548160/1*w)*Y2^8+(419418588839936/1+91742648926208/1*w)*Y0^6*Y3^2+(40407052320768/1-1924145348608/1*w)*Y0^5*Y2*Y3^2+(52951578050560/1+89344983433216/1*w)*Y0^4*Y2^2*Y3^2+(-38482906972160/1+7696581394432/1*w)*Y0^3*Y2^3*Y3^2+(-142379239604224/1-22345641099264/1*w)*Y0^2*Y2^4*Y3^2+(3754338287616/1+319438192640/1*w)*Y2^6*Y3^2+(2867427540992/1-110574469906432/1*w)*Y0^4*Y3^4+(38482906972160/1-7696581394432/1*w)*Y0^3*Y2*Y3^4+(237744693444608/1+42909944512512/1*w)*Y0^2*Y2^2*Y3^4+(-5631507431424/1-479157288960/1*w)*Y2^4*Y3^4+(-111036715761664/1-21158082641920/1*w)*Y0^2*Y3^6+(3754338287616/1+319438192640/1*w)*Y2^2*Y3^6+(-938584571904/1-79859548160/1*w)*Y3^8+(128917738356736/1-44255343017984/1*w)*Y0^6*Y3+(27419071217664/1+5291399708672/1*w)*Y0^5*Y2*Y3+(82257213652992/1+15874199126016/1*w)*Y0^4*Y2^2*Y3+(-2405181685760/1+8177617731584/1*w)*Y0^3*Y2^3*Y3+(-32800665239552/1+31477815312384/1*w)*Y0^2*Y2^4*Y3+(2615635083264/1-2735894167552/1*w)*Y2^6*Y3+(-207326661312512/1-83219286327296/1*w)*Y0^4*Y3^3+(-20684562497536/1-15874199126016/1*w)*Y0^3*Y2*Y3^3+(156036161863680/1-99514392248320/1*w)*Y0^2*Y2^2*Y3^3+(-7846905249792/1+8207682502656/1*w)*Y2^4*Y3^3+(-123235496624128/1+68036576935936/1*w)*Y0^2*Y3^5+(7846905249792/1-8207682502656/1*w)*Y2^2*Y3^5+(-2615635083264/1+2735894167552/1*w)*Y3^7+(-9227066146816/1-7688125677568/1*w)*Y0^6+(7952131948544/1-5486820720640/1*w)*Y0^4*Y2^2+(16704738426880/1+928249806848/1*w)*Y0^2*Y2^4+(-3754338287616/1-319438192640/1*w)*Y2^6+(-214797756923904/1+31462782926848/1*w)*Y0^4*Y3^2+(-21165598834688/1-1924145348608/1*w)*Y0^3*Y2*Y3^2+(-155111670153216/1-43706660945920/1*w)*Y0^2*Y2^2*Y3^2+(31827318276096/1+4926864359424/1*w)*Y2^4*Y3^2+(165344966606848/1+62019864625152/1*w)*Y0^2*Y3^4+(-52391621689344/1-8895414140928/1*w)*Y2^2*Y3^4+(24318641700864/1+4287987974144/1*w)*Y3^6+(17587891077120/1+32560147070976/1*w)*Y0^4*Y3+(-8057358647296/1+2765958938624/1*w)*Y0^3*Y2*Y3+(-41489384079360/1+17918603558912/1*w)*Y0^2*Y2^2*Y3+(7846905249792/1-8207682502656/1*w)*Y2^4*Y3+(139620796858368/1-31387620999168/1*w)*Y0^2*Y3^3+(-33011118637056/1+26036091748352/1*w)*Y2^2*Y3^3+(25164213387264/1-17828409245696/1*w)*Y3^5+(12475940470784/1-664243535872/1*w)*Y0^4+(5167382528000/1+1672352890880/1*w)*Y0^2*Y2^2+(-5631507431424/1-479157288960/1*w)*Y2^4+(-19117436305408/1-28129351434240/1*w)*Y0^2*Y3^2+(52391621689344/1+8895414140928/1*w)*Y2^2*Y3^2+(-58304986349568/1-12264547549184/1*w)*Y3^4+(-21766894256128/1+120259084288/1*w)*Y0^2*Y3+(7846905249792/1-8207682502656/1*w)*Y2^2*Y3+(-25164213387264/1+17828409245696/1*w)*Y3^3+(-559016837120/1+938584571904/1*w)*Y0^2+(-3754338287616/1-319438192640/1*w)*Y2^2+(24318641700864/1+4287987974144/1*w)*Y3^2+(2615635083264/1-2735894167552/1*w)*Y3+(-938584571904/1-79859548160/1*w)",
    den: "(6591348736/1-1365245952/1*w)*Y0^16*Y2^4+(2554331136/1-2671771648/1*w)*Y0^16*Y2^2*Y3^2+(-689963008/1-660602880/1*w)*Y0^16*Y3^4+(-32296140800/1-10452205568/1*w)*Y0^14*Y2^4*Y3+(-5930745856/1-15913189376/1*w)*Y0^13*Y2^5*Y3+(-42513465344/1+234881024/1*w)*Y0^14*Y2^2*Y3^3+(-32296140800/1-10452205568/1*w)*Y0^13*Y2^3*Y3^3+(-7868514304/1+2701131776/1*w)*Y0^14*Y3^5+(-10628366336/1+58720256/1*w)*Y0^13*Y2*Y3^5+(-39548092416/1+8191475712/1*w)*Y0^14*Y2^4+(13182697472/1-2730491904/1*w)*Y0^12*Y2^6+(26365394944/1-5460983808/1*w)*Y0^11*Y2^7+(7332691968/1+623902720/1*w)*Y0^10*Y2^8+(-15325986816/1+16030629888/1*w)*Y0^14*Y2^2*Y3^2+(-22577938432/1+34674311168/1*w)*Y0^12*Y2^4*Y3^2+(-121609650176/1+16617832448/1*w)*Y0^11*Y2^5*Y3^2+(-66735570944/1-7604273152/1*w)*Y0^10*Y2^6*Y3^2+(4139778048/1+3963617280/1*w)*Y0^14*Y3^4+(47886368768/1+35613835264/1*w)*Y0^12*Y2^2*Y3^4+(-53846474752/1+50793021440/1*w)*Y0^11*Y2^3*Y3^4+(-57942212608/1+13608419328/1*w)*Y0^10*Y2^4*Y3^4+(25396510720/1+3846176768/1*w)*Y0^12*Y3^6+(13799260160/1+13212057600/1*w)*Y0^11*Y2*Y3^6+(205520896/1+5314183168/1*w)*Y0^10*Y2^2*Y3^6+(638582784/1-667942912/1*w)*Y0^10*Y3^8+(161480704000/1+52261027840/1*w)*Y0^12*Y2^4*Y3+(23722983424/1+63652757504/1*w)*Y0^11*Y2^5*Y3+(-58661535744/1-4991221760/1*w)*Y0^10*Y2^6*Y3+(-70523027456/1-36817600512/1*w)*Y0^9*Y2^7*Y3+(-14826864640/1-39782973440/1*w)*Y0^8*Y2^8*Y3+(11700011008/1-6708789248/1*w)*Y0^7*Y2^9*Y3+(212567326720/1-1174405120/1*w)*Y0^12*Y2^2*Y3^3+(129184563200/1+41808822272/1*w)*Y0^11*Y2^3*Y3^3+(111392325632/1-5930745856/1*w)*Y0^10*Y2^4*Y3^3+(70523027456/1+36817600512/1*w)*Y0^9*Y2^5*Y3^3+(-62948114432/1+21609054208/1*w)*Y0^8*Y2^6*Y3^3+(-26365394944/1+5460983808/1*w)*Y0^7*Y2^7*Y3^3+(39342571520/1-13505658880/1*w)*Y0^12*Y3^5+(42513465344/1-234881024/1*w)*Y0^11*Y2*Y3^5+(88491425792/1-48326770688/1*w)*Y0^10*Y2^2*Y3^5+(196419256320/1-6400507904/1*w)*Y0^9*Y2^3*Y3^5+(67352133632/1+23546822656/1*w)*Y0^8*Y2^4*Y3^5+(13593739264/1+7897874432/1*w)*Y0^7*Y2^5*Y3^5+(-5930745856/1-15913189376/1*w)*Y0^10*Y3^7+(36582719488/1-16148070400/1*w)*Y0^9*Y2*Y3^7+(15737028608/1-5402263552/1*w)*Y0^8*Y2^2*Y3^7+(5108662272/1-5343543296/1*w)*Y0^7*Y2^3*Y3^7+(-5314183168/1+29360128/1*w)*Y0^8*Y3^9+(-4037017600/1-1306525696/1*w)*Y0^7*Y2*Y3^9+(98870231040/1-20478689280/1*w)*Y0^12*Y2^4+(-52730789888/1+10921967616/1*w)*Y0^10*Y2^6+(-79096184832/1+16382951424/1*w)*Y0^9*Y2^7+(-15406727168/1-3236954112/1*w)*Y0^8*Y2^8+(26365394944/1-5460983808/1*w)*Y0^7*Y2^9+(33698086912/1-4837081088/1*w)*Y0^6*Y2^10+(14665383936/1+1247805440/1*w)*Y0^5*Y2^11+(1101922304/1+575275008/1*w)*Y0^4*Y2^12+(38314967040/1-40076574720/1*w)*Y0^12*Y2^2*Y3^2+(90311753728/1-138697244672/1*w)*Y0^10*Y2^4*Y3^2+(364828950528/1-49853497344/1*w)*Y0^9*Y2^5*Y3^2+(201439838208/1+54697918464/1*w)*Y0^8*Y2^6*Y3^2+(-18790481920/1+63887638528/1*w)*Y0^7*Y2^7*Y3^2+(-69620203520/1+3706716160/1*w)*Y0^6*Y2^8*Y3^2+(-30813454336/1-6473908224/1*w)*Y0^5*Y2^9*Y3^2+(-2574516224/1-2145124352/1*w)*Y0^4*Y2^10*Y3^2+(-10349445120/1-9909043200/1*w)*Y0^12*Y3^4+(-191545475072/1-142455341056/1*w)*Y0^10*Y2^2*Y3^4+(161539424256/1-152379064320/1*w)*Y0^9*Y2^3*Y3^4+(110027079680/1-58411974656/1*w)*Y0^8*Y2^4*Y3^4+(108632473600/1-8573157376/1*w)*Y0^7*Y2^5*Y3^4+(32398901248/1+13109297152/1*w)*Y0^6*Y2^6*Y3^4+(5725224960/1+10599006208/1*w)*Y0^5*Y2^7*Y3^4+(-309198848/1+2742419456/1*w)*Y0^4*Y2^8*Y3^4+(-101586042880/1-15384707072/1*w)*Y0^10*Y3^6+(-41397780480/1-39636172800/1*w)*Y0^9*Y2*Y3^6+(-145479434240/1-16471031808/1*w)*Y0^8*Y2^2*Y3^6+(-70934069248/1-47445966848/1*w)*Y0^7*Y2^3*Y3^6+(12668895232/1-16015949824/1*w)*Y0^6*Y2^4*Y3^6+(21051211776/1-5431623680/1*w)*Y0^5*Y2^5*Y3^6+(4943511552/1-1023934464/1*w)*Y0^4*Y2^6*Y3^6+(-34079768576/1+12147752960/1*w)*Y0^8*Y3^8+(-45273317376/1-2407530496/1*w)*Y0^7*Y2*Y3^8+(-12544114688/1+2062548992/1*w)*Y0^6*Y2^2*Y3^8+(-9351200768/1-1277165568/1*w)*Y0^5*Y2^3*Y3^8+(-3759013888/1-560594944/1*w)*Y0^4*Y2^4*Y3^8+(3398434816/1+1974468608/1*w)*Y0^6*Y3^10+(-1277165568/1+1335885824/1*w)*Y0^5*Y2*Y3^10+(185335808/1+497287168/1*w)*Y0^4*Y2^2*Y3^10+(411959296/1-85327872/1*w)*Y0^4*Y3^12+(-322961408000/1-104522055680/1*w)*Y0^10*Y2^4*Y3+(-35584475136/1-95479136256/1*w)*Y0^9*Y2^5*Y3+(175984607232/1+14973665280/1*w)*Y0^8*Y2^6*Y3+(141046054912/1+73635201024/1*w)*Y0^7*Y2^7*Y3+(-8573157376/1+53200551936/1*w)*Y0^6*Y2^8*Y3+(-64430800896/1+17630756864/1*w)*Y0^5*Y2^9*Y3+(-14665383936/1-1247805440/1*w)*Y0^4*Y2^10*Y3+(-425134653440/1+2348810240/1*w)*Y0^10*Y2^2*Y3^3+(-193776844800/1-62713233408/1*w)*Y0^9*Y2^3*Y3^3+(-334176976896/1+17792237568/1*w)*Y0^8*Y2^4*Y3^3+(-141046054912/1-73635201024/1*w)*Y0^7*Y2^5*Y3^3+(103817412608/1-64357400576/1*w)*Y0^6*Y2^6*Y3^3+(111392325632/1-5930745856/1*w)*Y0^5*Y2^7*Y3^3+(30813454336/1+6473908224/1*w)*Y0^4*Y2^8*Y3^3+(-78685143040/1+27011317760/1*w)*Y0^10*Y3^5+(-63770198016/1+352321536/1*w)*Y0^9*Y2*Y3^5+(-265474277376/1+144980312064/1*w)*Y0^8*Y2^2*Y3^5+(-392838512640/1+12801015808/1*w)*Y0^7*Y2^3*Y3^5+(-147270402048/1-28420603904/1*w)*Y0^6*Y2^4*Y3^5+(-19935526912/1-34439430144/1*w)*Y0^5*Y2^5*Y3^5+(-5725224960/1-10599006208/1*w)*Y0^4*Y2^6*Y3^5+(17792237568/1+47739568128/1*w)*Y0^8*Y3^7+(-73165438976/1+32296140800/1*w)*Y0^7*Y2*Y3^7+(17381195776/1+37111201792/1*w)*Y0^6*Y2^2*Y3^7+(-36582719488/1+16148070400/1*w)*Y0^5*Y2^3*Y3^7+(-21051211776/1+5431623680/1*w)*Y0^4*Y2^4*Y3^7+(34644951040/1+2466250752/1*w)*Y0^6*Y3^9+(9556721664/1+6591348736/1*w)*Y0^5*Y2*Y3^9+(9351200768/1+1277165568/1*w)*Y0^4*Y2^2*Y3^9+(1277165568/1-1335885824/1*w)*Y0^4*Y3^11+(-131826974720/1+27304919040/1*w)*Y0^10*Y2^4+(79096184832/1-16382951424/1*w)*Y0^8*Y2^6+(79096184832/1-16382951424/1*w)*Y0^7*Y2^7+(8815378432/1+4602200064/1*w)*Y0^6*Y2^8+(-26365394944/1+5460983808/1*w)*Y0^5*Y2^9+(-7332691968/1-623902720/1*w)*Y0^4*Y2^10+(-51086622720/1+53435432960/1*w)*Y0^10*Y2^2*Y3^2+(-135467630592/1+208045867008/1*w)*Y0^8*Y2^4*Y3^2+(-364828950528/1+49853497344/1*w)*Y0^7*Y2^5*Y3^2+(-202672963584/1-86583017472/1*w)*Y0^6*Y2^6*Y3^2+(18790481920/1-63887638528/1*w)*Y0^5*Y2^7*Y3^2+(53472133120/1-8932818944/1*w)*Y0^4*Y2^8*Y3^2+(13799260160/1+13212057600/1*w)*Y0^10*Y3^4+(287318212608/1+213683011584/1*w)*Y0^8*Y2^2*Y3^4+(-161539424256/1+152379064320/1*w)*Y0^7*Y2^3*Y3^4+(-46227521536/1+75998691328/1*w)*Y0^6*Y2^4*Y3^4+(-108632473600/1+8573157376/1*w)*Y0^5*Y2^5*Y3^4+(-71741472768/1+396361728/1*w)*Y0^4*Y2^6*Y3^4+(152379064320/1+23077060608/1*w)*Y0^8*Y3^6+(41397780480/1+39636172800/1*w)*Y0^7*Y2*Y3^6+(290342305792/1+16999514112/1*w)*Y0^6*Y2^2*Y3^6+(70934069248/1+47445966848/1*w)*Y0^5*Y2^3*Y3^6+(6239027200/1+23884464128/1*w)*Y0^4*Y2^4*Y3^6+(66243788800/1-22291677184/1*w)*Y0^6*Y3^8+(45273317376/1+2407530496/1*w)*Y0^5*Y2*Y3^8+(25521291264/1-10107224064/1*w)*Y0^4*Y2^2*Y3^8+(-6158286848/1-4616880128/1*w)*Y0^4*Y3^10+(322961408000/1+104522055680/1*w)*Y0^8*Y2^4*Y3+(23722983424/1+63652757504/1*w)*Y0^7*Y2^5*Y3+(-175984607232/1-14973665280/1*w)*Y0^6*Y2^6*Y3+(-70523027456/1-36817600512/1*w)*Y0^5*Y2^7*Y3+(23400022016/1-13417578496/1*w)*Y0^4*Y2^8*Y3+(425134653440/1-2348810240/1*w)*Y0^8*Y2^2*Y3^3+(129184563200/1+41808822272/1*w)*Y0^7*Y2^3*Y3^3+(334176976896/1-17792237568/1*w)*Y0^6*Y2^4*Y3^3+(70523027456/1+36817600512/1*w)*Y0^5*Y2^5*Y3^3+(-40869298176/1+42748346368/1*w)*Y0^4*Y2^6*Y3^3+(78685143040/1-27011317760/1*w)*Y0^8*Y3^5+(42513465344/1-234881024/1*w)*Y0^7*Y2*Y3^5+(265474277376/1-144980312064/1*w)*Y0^6*Y2^2*Y3^5+(196419256320/1-6400507904/1*w)*Y0^5*Y2^3*Y3^5+(79918268416/1+4873781248/1*w)*Y0^4*Y2^4*Y3^5+(-17792237568/1-47739568128/1*w)*Y0^6*Y3^7+(36582719488/1-16148070400/1*w)*Y0^5*Y2*Y3^7+(-33118224384/1-31708938240/1*w)*Y0^4*Y2^2*Y3^7+(-29330767872/1-2495610880/1*w)*Y0^4*Y3^9+(98870231040/1-20478689280/1*w)*Y0^8*Y2^4+(-52730789888/1+10921967616/1*w)*Y0^6*Y2^6+(-26365394944/1+5460983808/1*w)*Y0^5*Y2^7+(-741343232/1-1989148672/1*w)*Y0^4*Y2^8+(38314967040/1-40076574720/1*w)*Y0^8*Y2^2*Y3^2+(90311753728/1-138697244672/1*w)*Y0^6*Y2^4*Y3^2+(121609650176/1-16617832448/1*w)*Y0^5*Y2^5*Y3^2+(67968696320/1+39489372160/1*w)*Y0^4*Y2^6*Y3^2+(-10349445120/1-9909043200/1*w)*Y0^8*Y3^4+(-191545475072/1-142455341056/1*w)*Y0^6*Y2^2*Y3^4+(53846474752/1-50793021440/1*w)*Y0^5*Y2^3*Y3^4+(-5857345536/1-31195136000/1*w)*Y0^4*Y2^4*Y3^4+(-101586042880/1-15384707072/1*w)*Y0^6*Y3^6+(-13799260160/1-13212057600/1*w)*Y0^5*Y2*Y3^6+(-145068392448/1-5842665472/1*w)*Y0^4*Y2^2*Y3^6+(-32802603008/1+10811867136/1*w)*Y0^4*Y3^8+(-161480704000/1-52261027840/1*w)*Y0^6*Y2^4*Y3+(-5930745856/1-15913189376/1*w)*Y0^5*Y2^5*Y3+(58661535744/1+4991221760/1*w)*Y0^4*Y2^6*Y3+(-212567326720/1+1174405120/1*w)*Y0^6*Y2^2*Y3^3+(-32296140800/1-10452205568/1*w)*Y0^5*Y2^3*Y3^3+(-111392325632/1+5930745856/1*w)*Y0^4*Y2^4*Y3^3+(-39342571520/1+13505658880/1*w)*Y0^6*Y3^5+(-10628366336/1+58720256/1*w)*Y0^5*Y2*Y3^5+(-88491425792/1+48326770688/1*w)*Y0^4*Y2^2*Y3^5+(5930745856/1+15913189376/1*w)*Y0^4*Y3^7+(-39548092416/1+8191475712/1*w)*Y0^6*Y2^4+(13182697472/1-2730491904/1*w)*Y0^4*Y2^6+(-15325986816/1+16030629888/1*w)*Y0^6*Y2^2*Y3^2+(-22577938432/1+34674311168/1*w)*Y0^4*Y2^4*Y3^2+(4139778048/1+3963617280/1*w)*Y0^6*Y3^4+(47886368768/1+35613835264/1*w)*Y0^4*Y2^2*Y3^4+(25396510720/1+3846176768/1*w)*Y0^4*Y3^6+(32296140800/1+10452205568/1*w)*Y0^4*Y2^4*Y3+(42513465344/1-234881024/1*w)*Y0^4*Y2^2*Y3^3+(7868514304/1-2701131776/1*w)*Y0^4*Y3^5+(6591348736/1-1365245952/1*w)*Y0^4*Y2^4+(2554331136/1-2671771648/1*w)*Y0^4*Y2^2*Y3^2+(-689963008/1-660602880/1*w)*Y0^4*Y3^4",
};

/// g with z'' = z^2 g.
pub const Z_COFACTOR: RationalText = RationalText {
    num: "(16/1+0/1*w)*Y0^6+(-16/1-16/1*w)*Y0^4*Y3+(16/1-16/1*w)*Y0^3*Y2*Y3+(-48/1+0/1*w)*Y0^4+(16/1+0/1*w)*Y0^2*Y2^2+(32/1+0/1*w)*Y0*Y2^3+(6/1+2/1*w)*Y2^4+(-32/1+16/1*w)*Y0^2*Y3^2+(-32/1+0/1*w)*Y0*Y2*Y3^2+(-12/1-4/1*w)*Y2^2*Y3^2+(6/1+2/1*w)*Y3^4+(32/1+32/1*w)*Y0^2*Y3+(-16/1+16/1*w)*Y0*Y2*Y3+(-32/1+0/1*w)*Y2^2*Y3+(32/1+0/1*w)*Y3^3+(48/1+0/1*w)*Y0^2+(-16/1+0/1*w)*Y2^2+(32/1-16/1*w)*Y3^2+(-16/1-16/1*w)*Y3+(-16/1+0/1*w)",
    den: "(16/1+0/1*w)*Y0^6+(-48/1+0/1*w)*Y0^4+(48/1+0/1*w)*Y0^2+(-16/1+0/1*w)",
};

/// First embedding function times z.
pub const EMBED_RA_TIMES_Z: RationalText = RationalText {
    num: "(1064/1+136/1*w)*Y0^7+(-784/1+48/1*w)*Y0^6*Y2+(252/1-116/1*w)*Y0^5*Y2^2+(784/1-48/1*w)*Y0^5*Y3^2+(952/1-1064/1*w)*Y0^5*Y3+(1036/1-164/1*w)*Y0^4*Y2*Y3+(-224/1+416/1*w)*Y0^3*Y2^2*Y3+(224/1-416/1*w)*Y0^3*Y3^3+(-3192/1-408/1*w)*Y0^5+(1288/1-280/1*w)*Y0^4*Y2+(1624/1+504/1*w)*Y0^3*Y2^2+(280/1+184/1*w)*Y0^2*Y2^3+(-3696/1-176/1*w)*Y0^3*Y3^2+(-280/1-184/1*w)*Y0^2*Y2*Y3^2+(-1904/1+2128/1*w)*Y0^3*Y3+(-2072/1+328/1*w)*Y0^2*Y2*Y3+(224/1-416/1*w)*Y0*Y2^2*Y3+(-224/1+416/1*w)*Y0*Y3^3+(3192/1+408/1*w)*Y0^3+(-224/1+416/1*w)*Y0^2*Y2+(-1876/1-388/1*w)*Y0*Y2^2+(-280/1-184/1*w)*Y2^3+(2912/1+224/1*w)*Y0*Y3^2+(280/1+184/1*w)*Y2*Y3^2+(952/1-1064/1*w)*Y0*Y3+(1036/1-164/1*w)*Y2*Y3+(-1064/1-136/1*w)*Y0+(-280/1-184/1*w)*Y2",
    den: "(560/1+368/1*w)*Y0^7+(2016/1-928/1*w)*Y0^5*Y3+(3136/1-192/1*w)*Y0^4*Y2*Y3+(-1680/1-1104/1*w)*Y0^5+(560/1+368/1*w)*Y0^3*Y2^2+(1120/1+736/1*w)*Y0^2*Y2^3+(-112/1+208/1*w)*Y0*Y2^4+(-3696/1-176/1*w)*Y0^3*Y3^2+(-1120/1-736/1*w)*Y0^2*Y2*Y3^2+(224/1-416/1*w)*Y0*Y2^2*Y3^2+(-112/1+208/1*w)*Y0*Y3^4+(-4032/1+1856/1*w)*Y0^3*Y3+(-3136/1+192/1*w)*Y0^2*Y2*Y3+(-1120/1-736/1*w)*Y0*Y2^2*Y3+(1120/1+736/1*w)*Y0*Y3^3+(1680/1+1104/1*w)*Y0^3+(-560/1-368/1*w)*Y0*Y2^2+(3696/1+176/1*w)*Y0*Y3^2+(2016/1-928/1*w)*Y0*Y3+(-560/1-368/1*w)*Y0",
};

/// Second embedding function times z.
pub const EMBED_RB_TIMES_Z: RationalText = RationalText {
    num: "(2128/1+272/1*w)*Y0^6+(-2128/1-272/1*w)*Y0^5*Y2+(784/1-48/1*w)*Y0^4*Y2^2+(-784/1+48/1*w)*Y0^4*Y3^2+(1904/1-2128/1*w)*Y0^4*Y3+(-6384/1-816/1*w)*Y0^4+(4256/1+544/1*w)*Y0^3*Y2+(2688/1+640/1*w)*Y0^2*Y2^2+(-2688/1-640/1*w)*Y0^2*Y3^2+(-3808/1+4256/1*w)*Y0^2*Y3+(6384/1+816/1*w)*Y0^2+(-2128/1-272/1*w)*Y0*Y2+(-3472/1-592/1*w)*Y2^2+(3472/1+592/1*w)*Y3^2+(1904/1-2128/1*w)*Y3+(-2128/1-272/1*w)",
    den: "(560/1+368/1*w)*Y0^6+(2016/1-928/1*w)*Y0^4*Y3+(3136/1-192/1*w)*Y0^3*Y2*Y3+(-1680/1-1104/1*w)*Y0^4+(560/1+368/1*w)*Y0^2*Y2^2+(1120/1+736/1*w)*Y0*Y2^3+(-112/1+208/1*w)*Y2^4+(-3696/1-176/1*w)*Y0^2*Y3^2+(-1120/1-736/1*w)*Y0*Y2*Y3^2+(224/1-416/1*w)*Y2^2*Y3^2+(-112/1+208/1*w)*Y3^4+(-4032/1+1856/1*w)*Y0^2*Y3+(-3136/1+192/1*w)*Y0*Y2*Y3+(-1120/1-736/1*w)*Y2^2*Y3+(1120/1+736/1*w)*Y3^3+(1680/1+1104/1*w)*Y0^2+(-560/1-368/1*w)*Y2^2+(3696/1+176/1*w)*Y3^2+(2016/1-928/1*w)*Y3+(-560/1-368/1*w)",
};
