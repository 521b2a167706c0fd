//! C ABI over the `dtcodes` library.
//!
//! Every fallible function returns a [`DtStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can
//! be fetched with [`dt_last_error_message`]. Codes and classification
//! reports are opaque handles released with their `_free` function; strings
//! returned by the library are released with [`dt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dtcodes::awe::{average_weight_enumerator, minimal_guaranteed_length};
use dtcodes::classify::{classify_with, ClassificationReport, ClassifyOptions};
use dtcodes::equivalence::are_equivalent;
use dtcodes::search::{run_search, Family, SearchConfig, SearchMode};
use dtcodes::{CirculantSpec, Error, Field, GeneratorCode, Sign, ToeplitzTriple};

/// Result of a library call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed text or an unsupported field order.
    Parse = 3,
    InvalidArgument = 4,
    /// An enumeration or search would exceed its configured budget.
    BudgetExceeded = 5,
    /// An equivalence test hit its node cap without a verdict.
    Undecided = 6,
    /// A panic was caught at the boundary.
    Internal = 7,
}

/// Family of codes to search.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DtFamily {
    Toeplitz = 0,
    Circulant = 1,
    Negacirculant = 2,
}

/// A linear code with a generator matrix.
pub struct DtCode(GeneratorCode);

/// The outcome of classifying the optimal codes of one length.
pub struct DtClassification(ClassificationReport);

/// Class counts of a classification.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DtClassCounts {
    pub d_opt: usize,
    pub n_dt: usize,
    pub n_dc: usize,
    pub n_nc: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> DtStatus {
    match e {
        Error::UnsupportedField(_) | Error::ParseElement { .. } | Error::Parse { .. } => DtStatus::Parse,
        Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded { .. } => DtStatus::BudgetExceeded,
        Error::Undecided(_) => DtStatus::Undecided,
        _ => DtStatus::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (DtStatus, String)>) -> DtStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DtStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            DtStatus::Internal
        }
    }
}

type FfiResult<T> = Result<T, (DtStatus, String)>;

fn lib<T>(r: dtcodes::Result<T>) -> FfiResult<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (DtStatus, String) {
    (DtStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (DtStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> FfiResult<&'a mut T> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn code<'a>(p: *const DtCode) -> FfiResult<&'a GeneratorCode> {
    p.as_ref().map(|c| &c.0).ok_or_else(|| null("code"))
}

fn field(q: u32) -> FfiResult<Field> {
    lib(Field::new(q))
}

fn string(s: String) -> FfiResult<*mut c_char> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| (DtStatus::Internal, "output contains a nul byte".into()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn dt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy of the calling thread's last error message, or null if the last
/// call succeeded. Release with [`dt_string_free`].
#[no_mangle]
pub extern "C" fn dt_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |m| m.clone().into_raw()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the double Toeplitz code of the triple `"t;(a_1,...);(b_1,...)"`
/// over F_q.
///
/// # Safety
/// `triple` must be a nul-terminated string; `out_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_code_from_triple(q: u32, triple: *const c_char, out_code: *mut *mut DtCode) -> DtStatus {
    guard(|| {
        let out_code = out(out_code, "out_code")?;
        let t = lib(ToeplitzTriple::parse(field(q)?, text(triple, "triple")?))?;
        *out_code = Box::into_raw(Box::new(DtCode(t.code())));
        Ok(())
    })
}

/// Builds the double circulant or negacirculant code with first row `row`,
/// written `"(r_1,...,r_m)"`.
///
/// # Safety
/// `row` must be a nul-terminated string; `out_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_code_from_row(
    q: u32,
    row: *const c_char,
    negacirculant: bool,
    out_code: *mut *mut DtCode,
) -> DtStatus {
    guard(|| {
        let out_code = out(out_code, "out_code")?;
        let f = field(q)?;
        let r = lib(dtcodes::FqVector::parse(f, text(row, "row")?))?;
        let sign = if negacirculant { Sign::Negacirculant } else { Sign::Circulant };
        let spec = lib(CirculantSpec::new(&r, sign))?;
        *out_code = Box::into_raw(Box::new(DtCode(spec.code())));
        Ok(())
    })
}

/// Releases a code. Null is ignored.
///
/// # Safety
/// `code` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dt_code_free(code: *mut DtCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length and dimension of a code.
///
/// # Safety
/// `handle` must be a live code; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_code_parameters(handle: *const DtCode, out_n: *mut usize, out_k: *mut usize) -> DtStatus {
    guard(|| {
        let c = code(handle)?;
        *out(out_n, "out_n")? = c.n();
        *out(out_k, "out_k")? = c.k();
        Ok(())
    })
}

/// Minimum Hamming weight of a nonzero codeword.
///
/// # Safety
/// `handle` must be a live code; `out_d` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_code_minimum_weight(handle: *const DtCode, out_d: *mut usize) -> DtStatus {
    guard(|| {
        let out_d = out(out_d, "out_d")?;
        *out_d = lib(code(handle)?.minimum_weight())?;
        Ok(())
    })
}

/// Weight enumerator as a JSON array of decimal strings.
///
/// # Safety
/// `handle` must be a live code; `out_json` must be writable. The result is
/// released with [`dt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dt_code_weight_enumerator(handle: *const DtCode, out_json: *mut *mut c_char) -> DtStatus {
    guard(|| {
        let out_json = out(out_json, "out_json")?;
        let we = lib(code(handle)?.weight_enumerator())?;
        *out_json = string(we.to_json())?;
        Ok(())
    })
}

/// Whether the code has the same weight enumerator as its dual.
///
/// # Safety
/// `handle` must be a live code; `out_fsd` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_code_is_formally_self_dual(handle: *const DtCode, out_fsd: *mut bool) -> DtStatus {
    guard(|| {
        let out_fsd = out(out_fsd, "out_fsd")?;
        *out_fsd = lib(code(handle)?.is_formally_self_dual())?;
        Ok(())
    })
}

/// Generator matrix of the dual code as a new handle.
///
/// # Safety
/// `handle` must be a live code; `out_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_code_dual(handle: *const DtCode, out_code: *mut *mut DtCode) -> DtStatus {
    guard(|| {
        let out_code = out(out_code, "out_code")?;
        *out_code = Box::into_raw(Box::new(DtCode(code(handle)?.dual_code())));
        Ok(())
    })
}

/// Whether two codes are monomially equivalent.
///
/// # Safety
/// Both codes must be live handles; `out_equivalent` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_codes_equivalent(a: *const DtCode, b: *const DtCode, out_equivalent: *mut bool) -> DtStatus {
    guard(|| {
        let out_equivalent = out(out_equivalent, "out_equivalent")?;
        *out_equivalent = lib(are_equivalent(code(a)?, code(b)?))?;
        Ok(())
    })
}

/// Average weight enumerator over all double Toeplitz codes of length `n`,
/// as a JSON array of decimal strings.
///
/// # Safety
/// `out_json` must be writable; release the result with [`dt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dt_average_weight_enumerator(q: u32, n: usize, out_json: *mut *mut c_char) -> DtStatus {
    guard(|| {
        let out_json = out(out_json, "out_json")?;
        let we = lib(average_weight_enumerator(field(q)?, n))?;
        *out_json = string(we.to_json())?;
        Ok(())
    })
}

/// Smallest length from which the averaging bound guarantees a double
/// Toeplitz code of minimum weight at least `d`.
///
/// # Safety
/// `out_n` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_minimal_guaranteed_length(q: u32, d: usize, out_n: *mut usize) -> DtStatus {
    guard(|| {
        let out_n = out(out_n, "out_n")?;
        *out_n = lib(minimal_guaranteed_length(field(q)?, d))?.n;
        Ok(())
    })
}

/// Exhaustive search for the codes of largest minimum weight in `family` at
/// length `n`, with the field's default symmetry filter for double Toeplitz
/// codes and none for the circulant families. Writes the optimal minimum
/// weight and the hits as JSON lines.
///
/// # Safety
/// The out-pointers must be writable; release the string with
/// [`dt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dt_find_optimal(
    q: u32,
    n: usize,
    family: DtFamily,
    workers: usize,
    out_d: *mut usize,
    out_json_lines: *mut *mut c_char,
) -> DtStatus {
    guard(|| {
        let out_d = out(out_d, "out_d")?;
        let out_json_lines = out(out_json_lines, "out_json_lines")?;
        let f = field(q)?;
        let family = match family {
            DtFamily::Toeplitz => Family::Toeplitz,
            DtFamily::Circulant => Family::Circulant,
            DtFamily::Negacirculant => Family::Negacirculant,
        };
        let mut config = SearchConfig::new(f, n, family)
            .mode(SearchMode::FindOptimal)
            .workers(workers);
        if family != Family::Toeplitz {
            config = config.reduction(dtcodes::search::Reduction::None);
        }
        let report = lib(run_search(&config, None))?;
        let lines: String = report
            .hits
            .iter()
            .map(|h| serde_json::to_string(&h.record()).expect("record serializes") + "\n")
            .collect();
        *out_d = report.optimal_d.unwrap_or(0);
        *out_json_lines = string(lines)?;
        Ok(())
    })
}

/// Classifies the optimal double Toeplitz codes of length `n` over F_q.
/// `workers = 0` uses every core.
///
/// # Safety
/// `out_report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_classify(q: u32, n: usize, workers: usize, out_report: *mut *mut DtClassification) -> DtStatus {
    guard(|| {
        let out_report = out(out_report, "out_report")?;
        let opts = ClassifyOptions {
            workers,
            ..Default::default()
        };
        let report = lib(classify_with(field(q)?, n, &opts))?;
        *out_report = Box::into_raw(Box::new(DtClassification(report)));
        Ok(())
    })
}

/// Class counts of a classification.
///
/// # Safety
/// `report` must be a live handle; `out_counts` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dt_classification_counts(
    report: *const DtClassification,
    out_counts: *mut DtClassCounts,
) -> DtStatus {
    guard(|| {
        let r = &report.as_ref().ok_or_else(|| null("report"))?.0;
        *out(out_counts, "out_counts")? = DtClassCounts {
            d_opt: r.d_opt,
            n_dt: r.n_dt,
            n_dc: r.n_dc,
            n_nc: r.n_nc,
        };
        Ok(())
    })
}

/// The full classification report as a JSON document.
///
/// # Safety
/// `report` must be a live handle; `out_json` must be writable. Release the
/// string with [`dt_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dt_classification_json(report: *const DtClassification, out_json: *mut *mut c_char) -> DtStatus {
    guard(|| {
        let r = &report.as_ref().ok_or_else(|| null("report"))?.0;
        let out_json = out(out_json, "out_json")?;
        *out_json = string(serde_json::to_string(r).expect("report serializes"))?;
        Ok(())
    })
}

/// Releases a classification. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dt_classification_free(report: *mut DtClassification) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
