//! Published values for double Toeplitz codes over F2, F3 and F4, used by
//! the verification suites and tests.

/// Threshold lengths `n_q(d)` for `q = 2, 3, 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdRow {
    pub d: usize,
    pub n: [usize; 3],
}

pub const THRESHOLDS: &[ThresholdRow] = &[
    ThresholdRow { d: 5, n: [30, 20, 16] },
    ThresholdRow { d: 6, n: [40, 26, 22] },
    ThresholdRow { d: 7, n: [48, 32, 26] },
    ThresholdRow { d: 8, n: [56, 38, 32] },
    ThresholdRow { d: 9, n: [66, 44, 38] },
    ThresholdRow { d: 10, n: [74, 50, 42] },
    ThresholdRow { d: 11, n: [84, 56, 48] },
    ThresholdRow { d: 12, n: [92, 62, 52] },
    ThresholdRow { d: 13, n: [102, 68, 58] },
    ThresholdRow { d: 14, n: [110, 76, 64] },
    ThresholdRow { d: 15, n: [120, 82, 68] },
    ThresholdRow { d: 16, n: [128, 88, 74] },
    ThresholdRow { d: 17, n: [138, 94, 78] },
    ThresholdRow { d: 18, n: [146, 100, 84] },
    ThresholdRow { d: 19, n: [156, 106, 90] },
    ThresholdRow { d: 20, n: [164, 112, 94] },
    ThresholdRow { d: 21, n: [172, 118, 100] },
    ThresholdRow { d: 22, n: [182, 124, 104] },
    ThresholdRow { d: 23, n: [190, 130, 110] },
    ThresholdRow { d: 24, n: [200, 138, 116] },
    ThresholdRow { d: 25, n: [208, 144, 120] },
    ThresholdRow { d: 26, n: [218, 150, 126] },
    ThresholdRow { d: 27, n: [226, 156, 132] },
    ThresholdRow { d: 28, n: [236, 162, 136] },
    ThresholdRow { d: 29, n: [244, 168, 142] },
    ThresholdRow { d: 30, n: [254, 174, 146] },
    ThresholdRow { d: 31, n: [264, 180, 152] },
    ThresholdRow { d: 32, n: [272, 186, 158] },
    ThresholdRow { d: 33, n: [282, 194, 162] },
    ThresholdRow { d: 34, n: [290, 200, 168] },
    ThresholdRow { d: 35, n: [300, 206, 174] },
    ThresholdRow { d: 36, n: [308, 212, 178] },
    ThresholdRow { d: 37, n: [318, 218, 184] },
    ThresholdRow { d: 38, n: [326, 224, 188] },
    ThresholdRow { d: 39, n: [336, 230, 194] },
    ThresholdRow { d: 40, n: [344, 236, 200] },
    ThresholdRow { d: 41, n: [354, 244, 204] },
    ThresholdRow { d: 42, n: [362, 250, 210] },
    ThresholdRow { d: 43, n: [372, 256, 216] },
    ThresholdRow { d: 44, n: [380, 262, 220] },
    ThresholdRow { d: 45, n: [390, 268, 226] },
    ThresholdRow { d: 46, n: [398, 274, 230] },
    ThresholdRow { d: 47, n: [408, 280, 236] },
    ThresholdRow { d: 48, n: [416, 286, 242] },
    ThresholdRow { d: 49, n: [426, 294, 246] },
    ThresholdRow { d: 50, n: [434, 300, 252] },
];

/// Numbers of inequivalent optimal double Toeplitz codes of one length:
/// classes with no double circulant or negacirculant member, classes with a
/// double circulant member, and the remaining classes with a double
/// negacirculant member (F3 only).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassCounts {
    pub q: u8,
    pub n: usize,
    pub d: usize,
    /// `None` where the count is unknown.
    pub n_dt: Option<usize>,
    pub n_dc: usize,
    pub n_nc: usize,
}

pub const CLASS_COUNTS: &[ClassCounts] = &[
    ClassCounts { q: 2, n: 4, d: 2, n_dt: Some(0), n_dc: 2, n_nc: 0 },
    ClassCounts { q: 2, n: 6, d: 3, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 2, n: 8, d: 4, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 2, n: 10, d: 4, n_dt: Some(0), n_dc: 2, n_nc: 0 },
    ClassCounts { q: 2, n: 12, d: 4, n_dt: Some(4), n_dc: 4, n_nc: 0 },
    ClassCounts { q: 2, n: 14, d: 4, n_dt: Some(75), n_dc: 4, n_nc: 0 },
    ClassCounts { q: 2, n: 16, d: 5, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 2, n: 18, d: 6, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 2, n: 20, d: 6, n_dt: Some(0), n_dc: 3, n_nc: 0 },
    ClassCounts { q: 2, n: 22, d: 7, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 2, n: 24, d: 8, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 2, n: 26, d: 7, n_dt: Some(2), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 2, n: 28, d: 8, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 2, n: 30, d: 8, n_dt: Some(0), n_dc: 5, n_nc: 0 },
    ClassCounts { q: 2, n: 32, d: 8, n_dt: Some(1), n_dc: 30, n_nc: 0 },
    ClassCounts { q: 2, n: 34, d: 8, n_dt: Some(2), n_dc: 52, n_nc: 0 },
    ClassCounts { q: 2, n: 36, d: 8, n_dt: Some(347), n_dc: 403, n_nc: 0 },
    ClassCounts { q: 2, n: 38, d: 8, n_dt: Some(118328), n_dc: 415, n_nc: 0 },
    ClassCounts { q: 2, n: 40, d: 9, n_dt: Some(231), n_dc: 15, n_nc: 0 },
    ClassCounts { q: 3, n: 4, d: 3, n_dt: Some(0), n_dc: 0, n_nc: 1 },
    ClassCounts { q: 3, n: 6, d: 3, n_dt: Some(1), n_dc: 2, n_nc: 0 },
    ClassCounts { q: 3, n: 8, d: 4, n_dt: Some(0), n_dc: 3, n_nc: 0 },
    ClassCounts { q: 3, n: 10, d: 5, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 3, n: 12, d: 6, n_dt: Some(0), n_dc: 0, n_nc: 1 },
    ClassCounts { q: 3, n: 14, d: 6, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 3, n: 16, d: 6, n_dt: Some(104), n_dc: 7, n_nc: 5 },
    ClassCounts { q: 3, n: 18, d: 6, n_dt: Some(156189), n_dc: 57, n_nc: 0 },
    ClassCounts { q: 3, n: 20, d: 7, n_dt: Some(27), n_dc: 5, n_nc: 11 },
    ClassCounts { q: 3, n: 22, d: 8, n_dt: Some(1), n_dc: 2, n_nc: 0 },
    ClassCounts { q: 3, n: 24, d: 9, n_dt: Some(0), n_dc: 0, n_nc: 2 },
    ClassCounts { q: 3, n: 26, d: 8, n_dt: Some(3186), n_dc: 376, n_nc: 0 },
    ClassCounts { q: 4, n: 4, d: 3, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 4, n: 6, d: 4, n_dt: Some(0), n_dc: 1, n_nc: 0 },
    ClassCounts { q: 4, n: 8, d: 4, n_dt: Some(7), n_dc: 6, n_nc: 0 },
    ClassCounts { q: 4, n: 10, d: 5, n_dt: Some(2), n_dc: 2, n_nc: 0 },
    ClassCounts { q: 4, n: 12, d: 5, n_dt: Some(6864), n_dc: 13, n_nc: 0 },
    ClassCounts { q: 4, n: 14, d: 6, n_dt: Some(360), n_dc: 19, n_nc: 0 },
    ClassCounts { q: 4, n: 16, d: 6, n_dt: None, n_dc: 218, n_nc: 0 },
    ClassCounts { q: 4, n: 18, d: 7, n_dt: Some(2502), n_dc: 15, n_nc: 0 },
    ClassCounts { q: 4, n: 20, d: 8, n_dt: Some(0), n_dc: 4, n_nc: 0 },
];

pub fn class_counts(q: u8, n: usize) -> Option<&'static ClassCounts> {
    CLASS_COUNTS.iter().find(|c| c.q == q && c.n == n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// First row of a circulant block.
    Circulant,
    /// First row of a negacirculant block.
    Negacirculant,
    /// A `t;a;b` triple.
    Toeplitz,
}

/// A code given by a generator row or triple with its stated minimum weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorRow {
    pub q: u8,
    pub kind: RowKind,
    pub text: &'static str,
    pub n: usize,
    pub d: usize,
}

pub const GENERATOR_ROWS: &[GeneratorRow] = &[
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,0,0)", n: 16, d: 5 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,0,0,0)", n: 18, d: 5 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,0,0,0,0)", n: 20, d: 5 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,0,0,0,0,0)", n: 22, d: 5 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,0,0,0,0,0,0)", n: 24, d: 5 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,0,0,0,0,0,0,0)", n: 26, d: 5 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,0,0,0,0,0,0,0,0)", n: 28, d: 5 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,0,0,0,0,0,0,0,0,0)", n: 30, d: 6 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,0,0,0,0,0,0,0,0,0,0)", n: 32, d: 6 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0)", n: 36, d: 6 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 38, d: 6 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,1,1,1,1,0,0,1,0,0,0,0,0)", n: 28, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0)", n: 30, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0)", n: 32, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0)", n: 34, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0)", n: 36, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0)", n: 38, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0)", n: 40, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 42, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 44, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 46, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Toeplitz, text: "0;(1,1,1,1,0,1,1,0,0,0,0);(1,0,0,0,1,1,0,1,1,1,1)", n: 24, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0)", n: 42, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 46, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 48, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 50, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 52, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 54, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0)", n: 42, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0)", n: 44, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0)", n: 46, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0)", n: 48, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 50, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 52, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 54, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 56, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 58, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 60, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 62, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 64, d: 9 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 56, d: 10 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 60, d: 10 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 62, d: 10 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 64, d: 10 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 66, d: 10 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 68, d: 10 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 70, d: 10 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 72, d: 10 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,0,0,0)", n: 14, d: 5 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,0,0,0,0)", n: 16, d: 5 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,0,0,0,0,0)", n: 18, d: 5 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,1,1,1,0)", n: 12, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,1,0,0,0,0,0)", n: 20, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,1,0,0,0,0,0,0)", n: 22, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,1,0,0,0,0,0,0,0)", n: 24, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,2,0,1,0,0,0,0)", n: 22, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,2,0,1,0,0,0,0,0)", n: 24, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,2,0,1,0,0,0,0,0,0)", n: 26, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,2,0,1,0,0,0,0,0,0,0)", n: 28, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,2,0,1,0,0,0,0,0,0,0,0)", n: 30, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,1,1,0,1,0,0,0,0,0,0)", n: 28, d: 8 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,1,1,0,1,0,0,0,0,0,0,0)", n: 30, d: 8 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,1,1,0,1,0,0,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,1,1,0,1,0,0,0,0,0,0,0,0,0)", n: 34, d: 8 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,1,1,0,1,0,0,0,0,0,0,0,0,0,0)", n: 36, d: 8 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,2,0,1,1,0,0,0,0,0,0,0,0)", n: 34, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,2,0,1,1,0,0,0,0,0,0,0,0,0)", n: 36, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,2,0,1,1,0,0,0,0,0,0,0,0,0,0)", n: 38, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,2,0,1,1,0,0,0,0,0,0,0,0,0,0,0)", n: 40, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,2,0,1,1,0,0,0,0,0,0,0,0,0,0,0,0)", n: 42, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,2,1,0,1,1,0,0,0,0,0,0)", n: 34, d: 10 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,2,1,0,1,1,0,1,0,0,0,0,0,0,0,0)", n: 38, d: 10 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,2,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0)", n: 40, d: 10 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0)", n: 42, d: 10 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0)", n: 44, d: 10 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0)", n: 46, d: 10 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,1,1,0,1,1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0)", n: 48, d: 10 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,1,2,1,1,1,2,0,0,1,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,0,2,1,1,2,0,2,1,0,0,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,2,0,2,0,2,2,1,0,0,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,1,1,2,1,2,0,0,0,1,0,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,2,1,2,0,0,1,2,0,1,0,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,2,2,0,1,1,0,0,2,0,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,2,1,2,1,1,1,1,1,2,0,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,2,1,2,2,2,1,2,1,0,1,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,1,1,1,1,1,2,2,0,1,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,2,2,2,0,1,1,2,1,1,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,w,0)", n: 10, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,1,0,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,1,0,0,0)", n: 14, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,1,1,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,1,1,0,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,1,1,0,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,1,1,0,0,0,0,0)", n: 20, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,1,0,1,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,1,0,1,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,1,0,1,0,0,0,0)", n: 22, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,1,0,1,0,0,0,0,0)", n: 24, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,1,w,w,v,w,0,0)", n: 20, d: 8 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,v,w,1,1,0,0,0,0)", n: 22, d: 8 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,1,w,1,1,0,0,0,0,0)", n: 24, d: 8 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,1,w,1,1,0,0,0,0,0,0)", n: 26, d: 8 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,1,w,1,1,0,0,0,0,0,0,0)", n: 28, d: 8 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,1,w,1,1,0,0,0,0,0,0,0,0)", n: 30, d: 8 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,v,w,v,w,1,0,w,0,0)", n: 24, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,w,w,w,1,0,1,0,0,0,0)", n: 26, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,1,1,1,0,1,0,0,0,0,0)", n: 28, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,1,1,1,0,1,0,0,0,0,0,0)", n: 30, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,1,1,1,0,1,0,0,0,0,0,0,0)", n: 32, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,1,1,1,0,1,0,0,0,0,0,0,0,0)", n: 34, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,1,1,1,0,1,0,0,0,0,0,0,0,0,0)", n: 36, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,w,v,v,1,v,1,w,0,w,0,0)", n: 28, d: 10 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,v,1,1,w,1,0,1,0,0,0,0,0)", n: 30, d: 10 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,w,w,1,1,0,1,0,0,0,0,0,0)", n: 32, d: 10 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,w,w,1,1,0,1,0,0,0,0,0,0,0)", n: 34, d: 10 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,w,w,1,1,0,1,0,0,0,0,0,0,0,0)", n: 36, d: 10 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,w,w,1,1,0,1,0,0,0,0,0,0,0,0,0)", n: 38, d: 10 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,w,w,1,1,0,1,0,0,0,0,0,0,0,0,0,0)", n: 40, d: 10 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0)", n: 2, d: 1 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,0)", n: 4, d: 1 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,0,0)", n: 6, d: 1 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,0,0,0)", n: 8, d: 1 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,0,0,0,0)", n: 10, d: 1 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,0,0,0,0,0)", n: 12, d: 1 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1)", n: 2, d: 2 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0)", n: 4, d: 2 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,0)", n: 6, d: 2 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,0,0)", n: 8, d: 2 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,0,0,0)", n: 10, d: 2 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,0,0,0,0)", n: 12, d: 2 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0)", n: 6, d: 3 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,0)", n: 8, d: 3 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,0,0)", n: 10, d: 3 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,0,0,0)", n: 12, d: 3 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,0,0,0,0)", n: 14, d: 3 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,1,1,1)", n: 8, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,1,1,1,1)", n: 10, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,1,1,1,1,1)", n: 12, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,1,1,1,1,1,1)", n: 14, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(0,1,1,1,1,1,1,1)", n: 16, d: 4 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0)", n: 2, d: 1 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,0)", n: 4, d: 1 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,0,0)", n: 6, d: 1 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,0,0,0)", n: 8, d: 1 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,0,0,0,0)", n: 10, d: 1 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,0,0,0,0,0)", n: 12, d: 1 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1)", n: 2, d: 2 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,0)", n: 4, d: 2 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,0,0)", n: 6, d: 2 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,0,0,0)", n: 8, d: 2 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,0,0,0,0)", n: 10, d: 2 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,0,0,0,0,0)", n: 12, d: 2 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,0)", n: 6, d: 3 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,0,0)", n: 8, d: 3 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,0,0,0)", n: 10, d: 3 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,0,0,0,0)", n: 12, d: 3 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,0,0,0,0,0)", n: 14, d: 3 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,1,1,1)", n: 8, d: 4 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,1,1,1,1)", n: 10, d: 4 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,1,1,1,1,1)", n: 12, d: 4 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,1,1,1,1,1,1)", n: 14, d: 4 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(0,1,1,1,1,1,1,1)", n: 16, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0)", n: 2, d: 1 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,0)", n: 4, d: 1 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,0,0)", n: 6, d: 1 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,0,0,0)", n: 8, d: 1 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,0,0,0,0)", n: 10, d: 1 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,0,0,0,0,0)", n: 12, d: 1 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1)", n: 2, d: 2 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,0)", n: 4, d: 2 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,0,0)", n: 6, d: 2 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,0,0,0)", n: 8, d: 2 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,0,0,0,0)", n: 10, d: 2 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,0,0,0,0,0)", n: 12, d: 2 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,0)", n: 6, d: 3 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,0,0)", n: 8, d: 3 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,0,0,0)", n: 10, d: 3 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,0,0,0,0)", n: 12, d: 3 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,0,0,0,0,0)", n: 14, d: 3 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,1,1,1)", n: 8, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,1,1,1,1)", n: 10, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,1,1,1,1,1)", n: 12, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,1,1,1,1,1,1)", n: 14, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(0,1,1,1,1,1,1,1)", n: 16, d: 4 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1)", n: 4, d: 3 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w)", n: 4, d: 3 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1)", n: 6, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,0,1,0,0,1,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1)", n: 4, d: 2 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,1,1,1,1,1,0,0,1,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,1,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0)", n: 8, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,0,1,1,0,1,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,0)", n: 10, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,1,1,0,1,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0)", n: 10, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,1,1,1,0,1,1,0,1,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,0,0)", n: 12, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,0,1,1,1,1,0,1,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,0)", n: 12, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,1,1,0,0,1,1,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0)", n: 12, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,0,1,0,0,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,0)", n: 12, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,1,1,1,0,0,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,0,0,0)", n: 14, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,1,1,0,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,0,0)", n: 14, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,1,1,0,1,1,1,0,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,0,0)", n: 14, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,0,1,1,1,1,1,0,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,1,0)", n: 14, d: 4 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,0,0,1,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,0,1,1,1,0,1,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,0,0,1,1,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,0,0,0,0)", n: 20, d: 6 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,0,1,0,1,1,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,0,0,0)", n: 20, d: 6 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,1,1,0,1,0,1,1,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,0,0,1,0,0)", n: 20, d: 6 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,1,1,0,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,0,0,0)", n: 22, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,0,1,1,0,0,1,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,1,1,1,0,1,0,0,0)", n: 24, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,0,1,1,0,1,1,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,0,1,1,0,0,0,0)", n: 26, d: 7 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,0,1,1,1,1,1,1,0,0,1,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,0,1,1,1,0,0,0,0,0)", n: 28, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,0,1,1,0,1,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,1,0,0,0,1,0,0,0,0)", n: 30, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,0,1,1,1,0,1,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,1,1,0,1,1,1,0,0,1,0,0,0,0)", n: 30, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,0,1,1,1,1,0,1,1,1,0,1,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,0,1,0,1,1,0,1,0,0,0,0)", n: 30, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,1,1,0,1,1,1,1,0,1,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,0,0,1,0,1,1,1,0,1,0,0,0,0)", n: 30, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,1,0,0,1,0,1,1,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,1,1,1,1,0,1,0,0)", n: 30, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,0,0,0,1,0,0,0,1,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,1,0,1,0,0,0,0,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 2, kind: RowKind::Circulant, text: "(1,1,1,1,1,1,0,0,1,1,0,0,1,0,0,0)", n: 32, d: 8 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,1,0,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,1,2,2,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,2,2,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,1,0,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,1,0,2,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,0,1,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,0,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,1,0,2,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,1,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,0,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,2,0,2,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,2,1,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,0,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,2,0,2,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,0,1,0,1,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,0,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,1,1,2,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,1,1,0,1,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,0,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,1,1,2,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,0,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,0,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,1,2,1,2,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,1,1,0,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,1,1,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,1,1,2,2,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,1,0,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,1,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,1,0,1,1,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,1,0,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,0,2,1,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,2,0,1,1,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,1,0,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,0,1,2,1,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,2,0,1,1,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,0,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,1,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,2,1,1,1,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,1,0,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,1,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,1,2,1,1,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,0,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,0,2,2,0,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,2,2,1,1,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,0,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,1,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,2,2,1,1,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,0,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,1,1,1,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,0,1,1,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,0,1,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,1,1,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,0,1,1,2,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,0,1,1,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,1,1,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,0,2,1,2,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,2,1,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,0,2,1,2,1,0,1,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,1,1,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,2,1,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,2,0,1,0,1,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,2,2,1,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,2,0,2,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,1,1,2,1,2,0,0,1,0,0)", n: 22, d: 8 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,0,2,1,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,2,1,2,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,1,1,1,2,2,2,1,2,0)", n: 22, d: 8 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,1,2,0,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Circulant, text: "(1,2,2,1,2,2,1,0,0)", n: 18, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,2,0,1,1,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,2,0,1,2,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,2,1,1,0,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,1,0,1,1,2,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,1,1,0,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,1,2,1,0,0,1,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,1,2,0,1,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,0,1,2,2,1,0,1,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,1,0,1,1,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,2,2,1,0,1,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,2,2,1,1,0,0)", n: 16, d: 6 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,0,2,2,2,2,0,1,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,2,1,1,0,1,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,2,2,0,1,1,1,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,2,1,1,0,1,1,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,1,1,2,2,0,1,0,1,0,0)", n: 24, d: 9 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,1,2,0,1,1,0,0,0)", n: 20, d: 7 },
    GeneratorRow { q: 3, kind: RowKind::Negacirculant, text: "(1,1,1,1,2,2,1,1,2,1,2,0)", n: 24, d: 9 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,1,1,1)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,v,1,1,1)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,1,0)", n: 8, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,0)", n: 8, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,1,1,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,0)", n: 8, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,1,1,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,0)", n: 8, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,1,1,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,1)", n: 8, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,v,1,1,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,1)", n: 8, d: 4 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,1,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,1,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,0)", n: 10, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,1,w,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,v,1,w,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,1,0,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,w,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,1,w,0,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,v,w,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,0,1,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,v,w,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,0,1,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,v,v,w,0,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,v,0,1,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,1,1,1,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,1,1,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,1,1,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,1,1,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,v,1,1,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,1,1,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,1,w,w,0)", n: 14, d: 6 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,v,1,1,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,w,1,0)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,1,1,1)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,1,1)", n: 12, d: 5 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,v,w,1,0,1,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,w,v,1,0,1,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,w,0,1,1,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,v,w,0,1,1,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,w,1,0,w,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,v,1,1,1,w,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,1,w,1,1,w,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,1,w,1,1,w,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,0,1,w,1,w,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,1,w,1,w,0,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,v,w,1,1,1,1,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,1,v,v,w,1,1,1,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,w,1,w,1,1,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,w,v,w,w,1,1,0)", n: 18, d: 7 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,0,v,w,1,0,1,0)", n: 20, d: 8 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,w,v,w,w,w,v,w,1,0)", n: 20, d: 8 },
    GeneratorRow { q: 4, kind: RowKind::Circulant, text: "(1,v,w,v,w,v,1,0,w,0)", n: 20, d: 8 },
];

/// Explicitly listed optimal triples of one length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ListedTriples {
    pub q: u8,
    pub n: usize,
    pub d: usize,
    pub triples: &'static [&'static str],
}

pub const LISTED_TRIPLES: &[ListedTriples] = &[
    ListedTriples {
        q: 2,
        n: 12,
        d: 4,
        triples: &[
            "0;(1,1,0,1,0);(1,1,1,0,0)",
            "0;(1,0,1,1,0);(1,1,1,0,0)",
            "0;(0,1,1,0,1);(1,1,1,0,0)",
            "0;(0,1,1,0,1);(1,1,0,1,0)",
        ],
    },
    ListedTriples {
        q: 2,
        n: 14,
        d: 4,
        triples: &[
            "0;(1,1,0,1,0,0);(1,1,1,0,0,0)",
            "0;(1,0,1,0,0,1);(1,1,1,0,1,0)",
            "0;(1,0,1,1,0,0);(1,1,1,0,0,0)",
            "0;(1,0,1,0,0,1);(1,0,0,1,1,0)",
            "0;(0,1,1,1,0,0);(1,1,0,1,0,0)",
            "0;(0,1,1,0,0,1);(1,1,1,1,0,0)",
            "0;(1,1,1,1,0,0);(1,1,1,0,0,0)",
            "0;(0,1,1,0,0,1);(1,1,1,1,1,0)",
            "0;(1,1,1,1,0,0);(1,1,0,1,0,0)",
            "0;(1,1,1,0,0,1);(1,1,0,1,0,0)",
            "0;(1,1,0,0,1,0);(1,1,1,0,0,0)",
            "0;(1,1,1,0,0,1);(1,1,0,0,1,0)",
            "0;(1,1,0,0,1,0);(1,1,1,1,0,0)",
            "0;(1,1,1,0,0,1);(0,1,1,0,1,0)",
            "0;(1,0,1,0,1,0);(0,1,1,1,0,0)",
            "0;(1,0,0,1,0,1);(1,1,0,0,1,0)",
            "0;(0,1,1,0,1,0);(1,1,1,0,0,0)",
            "0;(1,0,0,1,0,1);(1,1,1,0,1,0)",
            "0;(0,1,1,0,1,0);(1,1,0,1,0,0)",
            "0;(0,1,0,1,0,1);(1,1,1,0,0,0)",
            "0;(0,1,1,0,1,0);(0,1,1,1,0,0)",
            "0;(0,0,1,1,0,1);(1,1,0,1,0,0)",
            "0;(0,1,1,0,1,0);(1,0,1,0,1,0)",
            "0;(1,0,1,1,0,1);(0,0,1,1,0,1)",
            "0;(0,1,1,0,1,0);(0,1,1,0,1,0)",
            "0;(0,1,1,1,0,1);(1,0,0,1,1,0)",
            "0;(1,1,1,0,1,0);(1,1,0,1,0,0)",
            "0;(0,1,1,1,0,1);(0,1,1,1,0,1)",
            "0;(1,1,1,0,1,0);(0,1,1,0,1,0)",
            "0;(1,1,1,1,0,1);(0,0,1,1,1,0)",
            "0;(1,0,0,1,1,0);(1,1,0,1,0,0)",
            "0;(1,0,0,0,1,1);(1,1,0,1,0,0)",
            "0;(1,0,0,1,1,0);(1,0,1,1,0,0)",
            "0;(1,0,1,0,1,1);(0,1,0,1,1,0)",
            "0;(1,0,0,1,1,0);(1,1,1,1,0,0)",
            "0;(1,0,1,0,1,1);(0,1,1,1,1,0)",
            "0;(0,1,0,1,1,0);(1,0,1,1,0,0)",
            "0;(0,1,1,0,1,1);(1,1,1,0,1,0)",
            "0;(0,1,0,1,1,0);(0,1,1,1,0,0)",
            "0;(0,1,1,0,1,1);(1,0,1,1,0,1)",
            "0;(0,1,0,1,1,0);(1,1,0,0,1,0)",
            "0;(1,1,1,0,1,1);(1,0,1,1,0,0)",
            "0;(0,1,0,1,1,0);(1,0,1,0,1,0)",
            "0;(1,0,0,1,1,1);(1,0,1,0,0,1)",
            "0;(1,1,0,1,1,0);(1,0,1,1,0,0)",
            "0;(1,0,0,1,1,1);(1,1,0,0,1,1)",
            "0;(1,1,0,1,1,0);(0,1,1,0,1,0)",
            "0;(0,1,0,1,1,1);(1,0,1,0,1,1)",
            "0;(0,0,1,1,1,0);(1,1,0,1,0,0)",
            "0;(1,1,0,1,1,1);(1,1,1,0,0,0)",
            "0;(0,0,1,1,1,0);(1,0,1,1,0,0)",
            "0;(1,1,0,1,1,1);(0,1,0,1,1,0)",
            "0;(0,1,1,1,1,0);(1,1,0,0,1,0)",
            "0;(1,1,0,1,1,1);(0,1,1,1,0,1)",
            "0;(0,1,1,1,1,0);(1,0,1,0,1,0)",
            "0;(1,0,1,1,1,1);(1,1,0,1,1,0)",
            "0;(0,1,1,1,1,0);(0,1,1,0,1,0)",
            "0;(1,0,1,1,1,1);(1,1,1,0,1,1)",
            "0;(0,1,1,1,1,0);(0,1,0,1,1,0)",
            "0;(1,0,1,1,1,1);(1,1,0,1,1,1)",
            "0;(0,1,1,1,1,0);(1,1,0,1,1,0)",
            "0;(0,1,1,1,1,1);(1,0,1,0,1,0)",
            "0;(1,1,1,1,1,0);(1,1,1,0,0,0)",
            "1;(0,0,1,0,1,0);(1,1,0,0,0,0)",
            "0;(1,1,1,1,1,0);(0,1,1,1,0,0)",
            "1;(1,0,1,0,1,0);(1,0,1,0,1,0)",
            "0;(1,1,1,1,1,0);(1,1,0,0,1,0)",
            "1;(0,1,0,0,0,1);(1,0,0,1,0,0)",
            "0;(1,1,0,0,0,1);(1,1,1,1,0,0)",
            "1;(1,1,1,0,0,1);(1,0,1,1,1,0)",
            "0;(1,1,0,0,0,1);(1,0,0,1,1,0)",
            "1;(1,1,0,1,0,1);(1,0,1,0,0,0)",
            "0;(1,1,0,0,0,1);(1,0,1,1,1,0)",
            "1;(0,1,1,1,1,1);(1,1,1,0,0,0)",
            "0;(1,1,0,0,0,1);(1,1,1,1,1,0)",
        ],
    },
    ListedTriples {
        q: 2,
        n: 26,
        d: 7,
        triples: &[
            "0;(1,0,0,1,1,0,1,1,0,0,1,0);(1,0,1,0,0,1,1,0,1,1,0,0)",
            "0;(0,1,0,1,0,1,0,0,1,1,0,1);(1,1,0,1,1,0,0,1,0,1,0,1)",
        ],
    },
    ListedTriples {
        q: 2,
        n: 32,
        d: 8,
        triples: &[
            "1;(0,0,1,0,1,0,1,1,0,0,0,1,0,1,1);(1,1,1,0,0,1,1,0,0,0,0,0,1,0,1)",
        ],
    },
    ListedTriples {
        q: 2,
        n: 34,
        d: 8,
        triples: &[
            "1;(0,0,1,0,1,0,1,1,0,0,0,1,0,1,1,1);(1,1,1,0,0,1,1,0,0,0,0,0,1,0,1,0)",
            "1;(0,1,0,1,1,0,0,0,0,1,0,1,0,1,1,1);(1,0,1,1,0,0,1,1,1,1,0,1,1,1,0,0)",
        ],
    },
    ListedTriples {
        q: 3,
        n: 6,
        d: 3,
        triples: &[
            "1;(1,0);(2,1)",
        ],
    },
    ListedTriples {
        q: 3,
        n: 20,
        d: 7,
        triples: &[
            "0;(0,0,1,1,2,1,1,0,1);(1,2,0,1,1,2,2,2,2)",
            "0;(0,0,1,2,1,0,1,1,1);(1,2,2,0,2,1,2,0,0)",
            "0;(0,1,2,1,1,1,1,0,0);(2,0,0,2,2,2,2,1,2)",
            "0;(0,1,1,1,1,2,1,0,0);(1,0,0,2,1,2,2,2,2)",
            "0;(0,1,2,1,0,1,1,1,0);(2,2,2,2,0,2,1,2,0)",
            "0;(0,1,0,2,1,1,1,1,0);(2,0,1,1,1,1,2,0,1)",
            "0;(0,1,0,2,1,2,1,1,0);(1,0,2,2,1,2,1,0,2)",
            "0;(0,1,2,1,1,2,1,0,1);(1,0,2,0,2,1,2,2,1)",
            "0;(0,1,1,1,1,2,2,0,1);(2,0,2,0,1,1,2,2,2)",
            "0;(0,1,0,1,0,2,2,1,1);(2,2,2,2,1,1,0,2,0)",
            "0;(0,1,0,2,0,2,2,2,1);(2,2,2,1,1,1,0,1,0)",
            "0;(1,0,1,2,1,1,2,1,0);(2,0,0,2,1,2,2,1,2)",
            "1;(0,0,2,2,2,1,1,0,0);(2,0,0,2,2,1,1,1,0)",
            "1;(0,0,1,2,0,0,1,1,1);(1,2,2,2,0,0,1,2,0)",
            "1;(0,0,1,2,0,0,2,2,1);(1,2,2,1,0,0,2,1,0)",
            "1;(0,1,1,2,2,2,0,1,1);(1,0,1,1,2,2,2,1,1)",
            "1;(0,1,2,1,1,2,1,1,1);(1,1,2,2,2,1,2,2,1)",
            "1;(0,2,2,1,1,0,1,1,1);(1,1,0,1,0,1,0,2,2)",
            "1;(1,0,1,2,1,1,2,1,1);(1,2,2,2,1,2,2,1,2)",
            "1;(1,0,1,2,1,2,2,1,1);(1,1,2,2,1,1,2,1,2)",
            "1;(1,0,2,0,2,0,0,2,2);(2,2,0,2,2,0,2,2,2)",
            "1;(1,1,2,1,1,2,1,0,1);(2,2,2,0,2,1,2,2,1)",
            "1;(1,1,0,1,2,1,1,2,1);(2,2,2,1,2,2,1,2,0)",
            "1;(1,1,2,0,0,2,0,0,2);(2,2,0,0,2,2,0,1,0)",
            "1;(1,1,2,2,2,0,2,1,2);(2,1,1,2,1,0,1,1,1)",
            "1;(1,2,0,1,2,0,2,0,0);(2,2,0,1,1,0,1,0,0)",
            "1;(1,2,1,1,2,1,0,1,0);(1,2,2,2,0,2,1,2,2)",
        ],
    },
    ListedTriples {
        q: 3,
        n: 22,
        d: 8,
        triples: &[
            "1;(0,1,2,1,1,2,1,1,1,2);(1,1,2,2,2,1,2,2,1,2)",
        ],
    },
    ListedTriples {
        q: 4,
        n: 8,
        d: 4,
        triples: &[
            "0;(1,1,1);(1,w,1)",
            "0;(1,1,1);(1,v,1)",
            "0;(1,1,1);(1,1,w)",
            "0;(1,1,1);(v,v,w)",
            "0;(1,w,1);(w,1,w)",
            "1;(1,1,0);(v,0,w)",
            "1;(w,1,0);(v,0,1)",
        ],
    },
    ListedTriples {
        q: 4,
        n: 10,
        d: 5,
        triples: &[
            "0;(1,w,1,1);(1,w,v,w)",
            "1;(w,1,1,0);(v,1,0,v)",
        ],
    },
];

pub fn listed_triples(q: u8, n: usize) -> Option<&'static ListedTriples> {
    LISTED_TRIPLES.iter().find(|l| l.q == q && l.n == n)
}
