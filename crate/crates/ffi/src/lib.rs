//! C ABI for `homconj`.
//!
//! Permutations cross the boundary as opaque `HomconjPerm` handles created by
//! the `homconj_perm_*` constructors and released with `homconj_perm_free`.
//! Every fallible call returns a `HomconjStatus`; on failure a description is
//! available from `homconj_last_error` until the next call on the same thread.
//! Points are 1-based, as in the Rust API.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use homconj::abelian::{
    are_conjugate_abelian, are_element_conjugate_abelian, are_generator_conjugate, AbelianHom,
};
use homconj::dihedral::{
    are_conjugate_dihedral, are_element_conjugate_dihedral, are_generator_conjugate_dihedral,
    DihedralHom,
};
use homconj::oracle::find_hom_conjugator;
use homconj::{ConjugacyDecision, Error, FailedCondition, Permutation};

/// Opaque permutation handle.
pub struct HomconjPerm(Permutation);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomconjStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed cycle notation or image list.
    Parse = 3,
    DegreeMismatch = 4,
    /// Inputs violate a precondition, e.g. generator images that do not commute.
    InvalidInput = 5,
    CapExceeded = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomconjFailedCondition {
    None = 0,
    GeneratorTypes = 1,
    FixPart = 2,
    BarType = 3,
    Exponents = 4,
    OrbitPowers = 5,
    BlockType = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomconjDecision {
    pub conjugate: bool,
    pub element_conjugate: bool,
    pub generator_conjugate: bool,
    pub failed_condition: HomconjFailedCondition,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(HomconjStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Malformed { .. }
            | Error::PointOutOfRange { .. }
            | Error::RepeatedPoint(_)
            | Error::ZeroDegree
            | Error::NotBijection(_) => HomconjStatus::Parse,
            Error::DegreeMismatch { .. } => HomconjStatus::DegreeMismatch,
            Error::CapExceeded { .. } => HomconjStatus::CapExceeded,
            Error::InvalidHom(_)
            | Error::NotInBlockCentralizer { .. }
            | Error::NotCyclePermuting { .. }
            | Error::NotInvertingInvolution(_)
            | Error::Precondition(_) => HomconjStatus::InvalidInput,
            Error::NoReflectionConjugator
            | Error::ResidueDiscrepancy(_)
            | Error::Inconsistent(_) => HomconjStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(HomconjStatus::NullPointer, format!("{what} is null"))
}

fn set_last_error(msg: Option<String>) {
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() =
            msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    });
}

/// Runs `f`, recording its error message and converting panics to `Internal`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HomconjStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            HomconjStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(Some(msg));
            status
        }
        Err(_) => {
            set_last_error(Some("internal panic".into()));
            HomconjStatus::Internal
        }
    }
}

unsafe fn perm<'a>(p: *const HomconjPerm, what: &str) -> Result<&'a Permutation, Failure> {
    // SAFETY: the caller passes null or a live handle from this library.
    unsafe { p.as_ref() }
        .map(|h| &h.0)
        .ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and, by contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

fn handle(p: Permutation) -> *mut HomconjPerm {
    Box::into_raw(Box::new(HomconjPerm(p)))
}

fn failed_condition(f: FailedCondition) -> HomconjFailedCondition {
    match f {
        FailedCondition::None => HomconjFailedCondition::None,
        FailedCondition::GeneratorTypes => HomconjFailedCondition::GeneratorTypes,
        FailedCondition::FixPart => HomconjFailedCondition::FixPart,
        FailedCondition::BarType => HomconjFailedCondition::BarType,
        FailedCondition::Exponents => HomconjFailedCondition::Exponents,
        FailedCondition::OrbitPowers => HomconjFailedCondition::OrbitPowers,
        FailedCondition::BlockType => HomconjFailedCondition::BlockType,
    }
}

/// Message for the last failed call on this thread, or null after a
/// successful one. Owned by the library; valid until the next call.
#[no_mangle]
pub extern "C" fn homconj_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses cycle notation such as `"(1 2 3)(4 5)"` into a permutation of `degree` points.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_parse(
    text: *const c_char,
    degree: usize,
    out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: non-null and nul-terminated by contract.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| Failure(HomconjStatus::InvalidUtf8, e.to_string()))?;
        let p = Permutation::parse_cycles(text, degree)?;
        unsafe { put(out, handle(p), "out") }
    })
}

/// Builds a permutation from `len` 1-based images: `images[i]` is the image of `i + 1`.
///
/// # Safety
/// `images` must point to `len` readable values and `out` be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_from_images(
    images: *const usize,
    len: usize,
    out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        if images.is_null() {
            return Err(null("images"));
        }
        // SAFETY: `len` readable values by contract.
        let slice = unsafe { std::slice::from_raw_parts(images, len) };
        let p = Permutation::from_images(slice)?;
        unsafe { put(out, handle(p), "out") }
    })
}

/// # Safety
/// `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_identity(
    degree: usize,
    out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        if degree == 0 {
            return Err(Error::ZeroDegree.into());
        }
        unsafe { put(out, handle(Permutation::identity(degree)), "out") }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_free(p: *mut HomconjPerm) {
    if !p.is_null() {
        // SAFETY: allocated by `handle` and not yet freed, by contract.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Degree of `p`, or 0 for null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_degree(p: *const HomconjPerm) -> usize {
    unsafe { p.as_ref() }.map_or(0, |h| h.0.degree())
}

/// Image of the 1-based `point`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_apply(
    p: *const HomconjPerm,
    point: usize,
    out: *mut usize,
) -> HomconjStatus {
    guard(|| {
        let p = unsafe { perm(p, "p") }?;
        if point == 0 || point > p.degree() {
            return Err(Error::PointOutOfRange {
                point,
                degree: p.degree(),
            }
            .into());
        }
        unsafe { put(out, p.apply(point), "out") }
    })
}

/// Canonical cycle notation of `p`, or null for a null handle. Release with
/// `homconj_string_free`.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_format(p: *const HomconjPerm) -> *mut c_char {
    match unsafe { p.as_ref() } {
        Some(h) => CString::new(h.0.format_cycles()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn homconj_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by `CString::into_raw`, by contract.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// `out = p q`, the map `x -> p(q(x))`.
///
/// # Safety
/// `p`, `q` must be live handles and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_compose(
    p: *const HomconjPerm,
    q: *const HomconjPerm,
    out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        let r = unsafe { perm(p, "p") }?.compose(unsafe { perm(q, "q") }?)?;
        unsafe { put(out, handle(r), "out") }
    })
}

/// # Safety
/// `p` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_inverse(
    p: *const HomconjPerm,
    out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        let r = unsafe { perm(p, "p") }?.inverse();
        unsafe { put(out, handle(r), "out") }
    })
}

/// `out = g p g^-1`.
///
/// # Safety
/// `g`, `p` must be live handles and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_conjugate(
    g: *const HomconjPerm,
    p: *const HomconjPerm,
    out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        let r = unsafe { perm(g, "g") }?.conjugate(unsafe { perm(p, "p") }?)?;
        unsafe { put(out, handle(r), "out") }
    })
}

/// Order of `p`, saturating at `UINT64_MAX`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_order(p: *const HomconjPerm, out: *mut u64) -> HomconjStatus {
    guard(|| {
        let order = unsafe { perm(p, "p") }?.order();
        unsafe { put(out, u64::try_from(order).unwrap_or(u64::MAX), "out") }
    })
}

/// Writes the cycle lengths of `p`, fixed points included, in descending
/// order. `len` receives the number of lengths; when it exceeds `capacity`
/// nothing is written to `buf` and `BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `p` must be a live handle, `buf` valid for `capacity` writes (or null when
/// `capacity` is 0) and `len` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_cycle_type(
    p: *const HomconjPerm,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> HomconjStatus {
    guard(|| {
        let ct = unsafe { perm(p, "p") }?.cycle_type();
        let lengths = ct.lengths();
        unsafe { put(len, lengths.len(), "len") }?;
        if lengths.len() > capacity {
            return Err(Failure(
                HomconjStatus::BufferTooSmall,
                format!("{} lengths do not fit in {capacity}", lengths.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        // SAFETY: `capacity >= lengths.len()` writable slots by contract.
        unsafe { ptr::copy_nonoverlapping(lengths.as_ptr(), buf, lengths.len()) };
        Ok(())
    })
}

/// True iff both handles are non-null and hold equal permutations.
///
/// # Safety
/// Each argument must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn homconj_perm_equal(p: *const HomconjPerm, q: *const HomconjPerm) -> bool {
    match unsafe { (p.as_ref(), q.as_ref()) } {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

fn report(
    decision: &ConjugacyDecision,
    element: bool,
    generator: bool,
    out: *mut HomconjDecision,
    witness_out: *mut *mut HomconjPerm,
) -> Result<(), Failure> {
    let value = HomconjDecision {
        conjugate: decision.verdict,
        element_conjugate: element,
        generator_conjugate: generator,
        failed_condition: failed_condition(decision.failed_condition),
    };
    unsafe { put(out, value, "out") }?;
    if !witness_out.is_null() {
        let w = decision.witness.clone().map_or(ptr::null_mut(), handle);
        // SAFETY: non-null and valid for one write by contract.
        unsafe { witness_out.write(w) };
    }
    Ok(())
}

/// Decides conjugacy of the homomorphisms `a -> phi_a, b -> phi_b` and
/// `a -> psi_a, b -> psi_b` from an abelian group on `a`, `b`.
///
/// When `witness_out` is non-null it receives a conjugator `w` with
/// `w phi w^-1 = psi`, or null if the pair is not conjugate. The witness
/// search is cap-limited and may fail with `CAP_EXCEEDED`.
///
/// # Safety
/// The four permutations must be live handles, `out` valid for one write,
/// and `witness_out` null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_decide_abelian(
    phi_a: *const HomconjPerm,
    phi_b: *const HomconjPerm,
    psi_a: *const HomconjPerm,
    psi_b: *const HomconjPerm,
    out: *mut HomconjDecision,
    witness_out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        let phi = AbelianHom::new(
            unsafe { perm(phi_a, "phi_a") }?.clone(),
            unsafe { perm(phi_b, "phi_b") }?.clone(),
        )?;
        let psi = AbelianHom::new(
            unsafe { perm(psi_a, "psi_a") }?.clone(),
            unsafe { perm(psi_b, "psi_b") }?.clone(),
        )?;
        let decision = are_conjugate_abelian(&phi, &psi, !witness_out.is_null())?;
        report(
            &decision,
            are_element_conjugate_abelian(&phi, &psi)?,
            are_generator_conjugate(&phi, &psi)?,
            out,
            witness_out,
        )
    })
}

/// As `homconj_decide_abelian`, for `D_2m` on rotation `r` and reflection `s`.
///
/// # Safety
/// As for `homconj_decide_abelian`.
#[no_mangle]
pub unsafe extern "C" fn homconj_decide_dihedral(
    m: u64,
    phi_r: *const HomconjPerm,
    phi_s: *const HomconjPerm,
    psi_r: *const HomconjPerm,
    psi_s: *const HomconjPerm,
    out: *mut HomconjDecision,
    witness_out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        let m = u128::from(m);
        let phi = DihedralHom::new(
            m,
            unsafe { perm(phi_r, "phi_r") }?.clone(),
            unsafe { perm(phi_s, "phi_s") }?.clone(),
        )?;
        let psi = DihedralHom::new(
            m,
            unsafe { perm(psi_r, "psi_r") }?.clone(),
            unsafe { perm(psi_s, "psi_s") }?.clone(),
        )?;
        let decision = are_conjugate_dihedral(&phi, &psi, !witness_out.is_null())?;
        report(
            &decision,
            are_element_conjugate_dihedral(&phi, &psi)?,
            are_generator_conjugate_dihedral(&phi, &psi)?,
            out,
            witness_out,
        )
    })
}

/// Searches for `w` with `w phi[i] w^-1 = psi[i]` for all `i < count`.
/// `out` receives the first such `w` in enumeration order, or null.
/// Searches larger than `cap` candidates fail with `CAP_EXCEEDED`.
///
/// # Safety
/// `phi` and `psi` must point to `count` live handles each and `out` be valid
/// for one write.
#[no_mangle]
pub unsafe extern "C" fn homconj_find_conjugator(
    phi: *const *const HomconjPerm,
    psi: *const *const HomconjPerm,
    count: usize,
    cap: u64,
    out: *mut *mut HomconjPerm,
) -> HomconjStatus {
    guard(|| {
        if phi.is_null() || psi.is_null() {
            return Err(null("generator list"));
        }
        if count == 0 {
            return Err(Failure(HomconjStatus::InvalidInput, "no generators".into()));
        }
        let collect =
            |list: *const *const HomconjPerm, what: &str| -> Result<Vec<Permutation>, Failure> {
                // SAFETY: `count` readable handles by contract.
                let handles = unsafe { std::slice::from_raw_parts(list, count) };
                handles
                    .iter()
                    .map(|&h| unsafe { perm(h, what) }.cloned())
                    .collect()
            };
        let (phi, psi) = (collect(phi, "phi")?, collect(psi, "psi")?);
        let found = find_hom_conjugator(&phi, &psi, u128::from(cap))?;
        unsafe { put(out, found.map_or(ptr::null_mut(), handle), "out") }
    })
}
