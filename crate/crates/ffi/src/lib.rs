//! C ABI for the flatfold library: opaque pattern and assignment handles,
//! status codes, and string-based exchange for samples and JSON documents.
//!
//! Ownership rules: every `*_generate`/`*_from_*`/`ff_reference_assignment`
//! output is owned by the caller and must be released with the matching
//! `*_free`; strings returned by this library are released with
//! `ff_string_free`. Handles must not be mutated concurrently, but distinct
//! handles may be used from distinct threads.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use flatfold::chain::{self, ChainConfig};
use flatfold::error::Error;
use flatfold::families::{self, PatternSpec, TwistMode};
use flatfold::global;
use flatfold::local;
use flatfold::pattern::{CreasePattern, MvAssignment};
use flatfold::svg::{render_svg, RenderOptions};
use flatfold::vertex;

/// Result status for every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FfStatus {
    Ok = 0,
    InvalidArgument = 1,
    NotLocallyFlatFoldable = 2,
    Overflow = 3,
    ReducibleChain = 4,
    IoError = 5,
    InternalError = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(err: &Error) -> FfStatus {
    let status = match err {
        Error::InvalidSpec(_) | Error::WrongFamily { .. } | Error::AssignmentLength { .. } => {
            FfStatus::InvalidArgument
        }
        Error::NotLocallyFlatFoldable => FfStatus::NotLocallyFlatFoldable,
        Error::StateSpaceOverflow { .. }
        | Error::SizeOverLimit { .. }
        | Error::DegreeOverLimit { .. }
        | Error::MixingCapExceeded(_) => FfStatus::Overflow,
        Error::ReducibleChain => FfStatus::ReducibleChain,
        Error::Io(_) | Error::Json(_) => FfStatus::IoError,
        _ => FfStatus::InternalError,
    };
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(err.to_string()).ok();
    });
    status
}

fn clear_error() {
    LAST_ERROR.with(|slot| {
        slot.borrow_mut().take();
    });
}

/// Message for the most recent error on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ff_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Opaque crease pattern.
pub struct FfPattern(CreasePattern);
/// Opaque mountain-valley assignment.
pub struct FfAssignment(MvAssignment);

unsafe fn pattern_ref<'a>(p: *const FfPattern) -> Option<&'a CreasePattern> {
    p.as_ref().map(|w| &w.0)
}

unsafe fn assignment_ref<'a>(a: *const FfAssignment) -> Option<&'a MvAssignment> {
    a.as_ref().map(|w| &w.0)
}

fn invalid(msg: &str) -> FfStatus {
    set_error(&Error::InvalidSpec(msg.to_string()))
}

/// Generate a pattern. `family` is one of "square_grid", "square_twist",
/// "miura", "triangle", "kite", "single_vertex"; `theta` is in radians and
/// ignored by families without an angle parameter; `uniform_mode` selects the
/// sheared square-twist tiling. For "single_vertex", `rows` is the
/// half-degree n and `cols` is ignored.
///
/// # Safety
/// `family` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ff_pattern_generate(
    family: *const c_char,
    rows: usize,
    cols: usize,
    theta: f64,
    uniform_mode: bool,
    out: *mut *mut FfPattern,
) -> FfStatus {
    clear_error();
    if family.is_null() || out.is_null() {
        return invalid("null pointer");
    }
    let family = match CStr::from_ptr(family).to_str() {
        Ok(s) => s,
        Err(_) => return invalid("family is not valid UTF-8"),
    };
    let spec = match family {
        "square_grid" => PatternSpec::SquareGrid { rows, cols },
        "square_twist" => PatternSpec::SquareTwist {
            rows,
            cols,
            mode: if uniform_mode { TwistMode::Uniform } else { TwistMode::Alternating },
        },
        "miura" => PatternSpec::Miura { rows, cols, theta },
        "triangle" => PatternSpec::Triangle { rows, cols },
        "kite" => PatternSpec::Kite { rows, cols, theta },
        "single_vertex" => PatternSpec::SingleVertex { n: rows },
        other => return invalid(&format!("unknown family {other:?}")),
    };
    match families::generate(spec) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(FfPattern(p)));
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Parse the JSON pattern format. On success `out` receives the pattern and,
/// when the file carries M/V entries, `out_assignment` (if non-null)
/// receives the attached assignment, else null.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ff_pattern_from_json(
    json: *const c_char,
    out: *mut *mut FfPattern,
    out_assignment: *mut *mut FfAssignment,
) -> FfStatus {
    clear_error();
    if json.is_null() || out.is_null() {
        return invalid("null pointer");
    }
    let text = match CStr::from_ptr(json).to_str() {
        Ok(s) => s,
        Err(_) => return invalid("json is not valid UTF-8"),
    };
    match flatfold::io::load_pattern(text) {
        Ok((pattern, assignment)) => {
            *out = Box::into_raw(Box::new(FfPattern(pattern)));
            if !out_assignment.is_null() {
                *out_assignment = match assignment {
                    Some(a) => Box::into_raw(Box::new(FfAssignment(a))),
                    None => ptr::null_mut(),
                };
            }
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Serialize a pattern (and optional assignment) to the JSON format. The
/// returned string is owned by the caller; free with `ff_string_free`.
///
/// # Safety
/// `pattern` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn ff_pattern_to_json(
    pattern: *const FfPattern,
    assignment: *const FfAssignment,
) -> *mut c_char {
    clear_error();
    let Some(p) = pattern_ref(pattern) else { return ptr::null_mut() };
    let json = flatfold::io::save_pattern(p, assignment_ref(assignment));
    CString::new(json).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `pattern` must be a live handle (or null, which is a no-op).
#[no_mangle]
pub unsafe extern "C" fn ff_pattern_free(pattern: *mut FfPattern) {
    if !pattern.is_null() {
        drop(Box::from_raw(pattern));
    }
}

/// # Safety
/// `assignment` must be a live handle (or null).
#[no_mangle]
pub unsafe extern "C" fn ff_assignment_free(assignment: *mut FfAssignment) {
    if !assignment.is_null() {
        drop(Box::from_raw(assignment));
    }
}

/// # Safety
/// `s` must have been returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `pattern` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ff_pattern_face_count(pattern: *const FfPattern) -> usize {
    pattern_ref(pattern).map_or(0, |p| p.face_count())
}

/// # Safety
/// `pattern` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ff_pattern_crease_count(pattern: *const FfPattern) -> usize {
    pattern_ref(pattern).map_or(0, |p| p.crease_count())
}

/// The family's locally flat-foldable reference assignment.
///
/// # Safety
/// `pattern` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ff_reference_assignment(
    pattern: *const FfPattern,
    out: *mut *mut FfAssignment,
) -> FfStatus {
    clear_error();
    let Some(p) = pattern_ref(pattern) else { return invalid("null pattern") };
    if out.is_null() {
        return invalid("null out pointer");
    }
    match families::reference_assignment(p) {
        Ok(a) => {
            *out = Box::into_raw(Box::new(FfAssignment(a)));
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Parse an "MV..." string into an assignment handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ff_assignment_from_string(
    text: *const c_char,
    out: *mut *mut FfAssignment,
) -> FfStatus {
    clear_error();
    if text.is_null() || out.is_null() {
        return invalid("null pointer");
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(_) => return invalid("assignment is not valid UTF-8"),
    };
    match text.trim().parse::<MvAssignment>() {
        Ok(a) => {
            *out = Box::into_raw(Box::new(FfAssignment(a)));
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Render the assignment as an "MV..." string; free with `ff_string_free`.
///
/// # Safety
/// `assignment` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ff_assignment_to_string(
    assignment: *const FfAssignment,
) -> *mut c_char {
    let Some(a) = assignment_ref(assignment) else { return ptr::null_mut() };
    CString::new(a.to_string()).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `pattern`, `assignment`, and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ff_is_locally_flat_foldable(
    pattern: *const FfPattern,
    assignment: *const FfAssignment,
    out: *mut bool,
) -> FfStatus {
    clear_error();
    let (Some(p), Some(a)) = (pattern_ref(pattern), assignment_ref(assignment)) else {
        return invalid("null handle");
    };
    if out.is_null() {
        return invalid("null out pointer");
    }
    if let Err(e) = p.assert_covers(a) {
        return set_error(&e);
    }
    *out = local::is_locally_flat_foldable(p, a);
    FfStatus::Ok
}

/// Negate the creases bordering `face`, in place.
///
/// # Safety
/// `pattern` and `assignment` must be valid; `assignment` must be uniquely
/// held by the caller.
#[no_mangle]
pub unsafe extern "C" fn ff_flip_face(
    pattern: *const FfPattern,
    assignment: *mut FfAssignment,
    face: usize,
) -> FfStatus {
    clear_error();
    let Some(p) = pattern_ref(pattern) else { return invalid("null pattern") };
    let Some(a) = assignment.as_mut() else { return invalid("null assignment") };
    if face >= p.face_count() {
        return invalid("face index out of range");
    }
    if let Err(e) = p.assert_covers(&a.0) {
        return set_error(&e);
    }
    a.0 = p.flip_face(&a.0, face);
    FfStatus::Ok
}

/// Whether flipping `face` keeps the assignment locally flat-foldable.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ff_is_flippable(
    pattern: *const FfPattern,
    assignment: *const FfAssignment,
    face: usize,
    out: *mut bool,
) -> FfStatus {
    clear_error();
    let (Some(p), Some(a)) = (pattern_ref(pattern), assignment_ref(assignment)) else {
        return invalid("null handle");
    };
    if out.is_null() || face >= p.face_count() {
        return invalid("bad arguments");
    }
    match local::is_flippable(p, a, face) {
        Ok(v) => {
            *out = v;
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Run the face-flip chain for `steps` steps from `assignment`, updating it
/// in place; `out_accepted` (if non-null) receives the accepted-flip count.
/// Deterministic for a fixed `(seed, stream)`.
///
/// # Safety
/// All pointers must be valid; `assignment` must be uniquely held.
#[no_mangle]
pub unsafe extern "C" fn ff_run_chain(
    pattern: *const FfPattern,
    assignment: *mut FfAssignment,
    steps: u64,
    seed: u64,
    stream: u64,
    out_accepted: *mut u64,
) -> FfStatus {
    clear_error();
    let Some(p) = pattern_ref(pattern) else { return invalid("null pattern") };
    let Some(a) = assignment.as_mut() else { return invalid("null assignment") };
    let config = ChainConfig {
        pattern: p,
        initial: a.0.clone(),
        steps,
        seed,
        stream,
        report_every: None,
    };
    match chain::run_chain(&config) {
        Ok(trace) => {
            a.0 = trace.final_state;
            if !out_accepted.is_null() {
                *out_accepted = trace.accepted;
            }
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Exact uniform sample of the equal-angle single vertex C_{2n} as an
/// "MV..." string; free with `ff_string_free`.
#[no_mangle]
pub extern "C" fn ff_vertex_sample(n: usize, seed: u64) -> *mut c_char {
    clear_error();
    if n == 0 {
        return ptr::null_mut();
    }
    let mut rng = flatfold::rng::stream(seed, 0);
    let sample = vertex::exact_sample_single_vertex(n, &mut rng);
    CString::new(sample.to_string()).map_or(ptr::null_mut(), CString::into_raw)
}

/// Number of locally flat-foldable assignments of C_{2n}, as a decimal
/// string; free with `ff_string_free`.
#[no_mangle]
pub extern "C" fn ff_vertex_count(n: usize) -> *mut c_char {
    clear_error();
    if n == 0 {
        return ptr::null_mut();
    }
    CString::new(vertex::count_single_vertex_configs(n).to_string())
        .map_or(ptr::null_mut(), CString::into_raw)
}

/// Spectral gap of the face-flip chain on an enumerable pattern.
///
/// # Safety
/// `pattern` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ff_spectral_gap(pattern: *const FfPattern, out: *mut f64) -> FfStatus {
    clear_error();
    let Some(p) = pattern_ref(pattern) else { return invalid("null pattern") };
    if out.is_null() {
        return invalid("null out pointer");
    }
    match chain::spectral_gap(p) {
        Ok(gap) => {
            *out = gap;
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Exact mixing time to total variation `eps_num / eps_den`.
///
/// # Safety
/// `pattern` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn ff_exact_mixing_time(
    pattern: *const FfPattern,
    eps_num: u64,
    eps_den: u64,
    out: *mut u64,
) -> FfStatus {
    clear_error();
    let Some(p) = pattern_ref(pattern) else { return invalid("null pattern") };
    if out.is_null() || eps_den == 0 {
        return invalid("bad arguments");
    }
    let eps = num_rational::BigRational::new(eps_num.into(), eps_den.into());
    match chain::exact_mixing_time(p, &eps) {
        Ok(curve) => {
            *out = curve.tmix as u64;
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Global flat-foldability of a square-grid assignment: `out` receives 1 when
/// a valid layer order exists, 0 otherwise.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ff_is_globally_flat_foldable(
    pattern: *const FfPattern,
    assignment: *const FfAssignment,
    out: *mut i32,
) -> FfStatus {
    clear_error();
    let (Some(p), Some(a)) = (pattern_ref(pattern), assignment_ref(assignment)) else {
        return invalid("null handle");
    };
    if out.is_null() {
        return invalid("null out pointer");
    }
    match global::is_globally_flat_foldable(p, a) {
        Ok(witness) => {
            *out = witness.is_some() as i32;
            FfStatus::Ok
        }
        Err(e) => set_error(&e),
    }
}

/// Deterministic SVG rendering; free with `ff_string_free`.
///
/// # Safety
/// `pattern` must be a live handle; `assignment` may be null.
#[no_mangle]
pub unsafe extern "C" fn ff_render_svg(
    pattern: *const FfPattern,
    assignment: *const FfAssignment,
    shade_parity: bool,
) -> *mut c_char {
    clear_error();
    let Some(p) = pattern_ref(pattern) else { return ptr::null_mut() };
    let svg = render_svg(p, assignment_ref(assignment), &RenderOptions { shade_parity });
    CString::new(svg).map_or(ptr::null_mut(), CString::into_raw)
}
