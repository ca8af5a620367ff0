//! C ABI over `realtoric`.
//!
//! Every fallible call returns an `RtStatus`; on failure a message is kept
//! per thread and can be read with `rt_last_error_message`. Groups are opaque
//! heap handles released with `rt_group_free`. Array outputs are written into
//! caller buffers whose required length is reported by a companion call.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use realtoric::symn::partition::partitions;
use realtoric::symn::typea::{euler_number, lambda_typea};
use realtoric::{lambda_main, pi_two, BuildOptions, Error, Family, RootSystem, WeylGroup};

/// Largest `n` accepted by `rt_lambda_typea`.
pub const RT_MAX_TYPEA_N: u32 = 10;
/// Largest `n` whose Euler number fits in an `int64_t`.
pub const RT_MAX_EULER_N: u32 = 23;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnsupportedType = 3,
    E6Disabled = 4,
    ResourceCap = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

/// Opaque Weyl group handle.
pub struct RtWeylGroup {
    group: WeylGroup,
    lambda: OnceLock<Vec<i64>>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnsupportedType { .. } => RtStatus::UnsupportedType,
            Error::E6Disabled => RtStatus::E6Disabled,
            Error::ResourceCap { .. } => RtStatus::ResourceCap,
            Error::InvalidArgument(_) | Error::IndexOutOfRange { .. } => RtStatus::InvalidArgument,
            _ => RtStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: Option<String>) {
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    });
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RtStatus {
    let (status, msg) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => (RtStatus::Ok, None),
        Ok(Err(Failure(s, m))) => (s, Some(m)),
        Err(_) => (RtStatus::Internal, Some("internal panic".to_string())),
    };
    set_error(msg);
    status
}

fn null(what: &str) -> Failure {
    Failure(RtStatus::NullPointer, format!("{what} is null"))
}

unsafe fn handle<'a>(g: *const RtWeylGroup) -> Result<&'a RtWeylGroup, Failure> {
    g.as_ref().ok_or_else(|| null("group handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_slice<T: Copy>(buf: *mut T, len: usize, values: &[T]) -> Result<(), Failure> {
    if buf.is_null() {
        return Err(null("buffer"));
    }
    if len < values.len() {
        return Err(Failure(RtStatus::BufferTooSmall, format!("buffer holds {len}, need {}", values.len())));
    }
    ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    Ok(())
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. Valid until the next call into this library.
#[no_mangle]
pub extern "C" fn rt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds the Weyl group of type `family` (one of `ABCDEFG`) and `rank`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn rt_group_new(family: c_char, rank: u32, enable_e6: bool, out: *mut *mut RtWeylGroup) -> RtStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let letter = char::from(family as u8).to_string();
        let family: Family = letter.parse()?;
        let system = RootSystem::build(family, rank as usize, BuildOptions { enable_e6 })?;
        let group = WeylGroup::enumerate(&system)?;
        out.write(Box::into_raw(Box::new(RtWeylGroup { group, lambda: OnceLock::new() })));
        Ok(())
    })
}

/// # Safety
/// `g` must come from `rt_group_new` and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn rt_group_free(g: *mut RtWeylGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn rt_group_order(g: *const RtWeylGroup, out: *mut u64) -> RtStatus {
    guard(|| write_out(out, handle(g)?.group.order() as u64))
}

/// # Safety
/// `g` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn rt_group_rank(g: *const RtWeylGroup, out: *mut u32) -> RtStatus {
    guard(|| write_out(out, handle(g)?.group.rank() as u32))
}

/// # Safety
/// `g` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn rt_group_num_classes(g: *const RtWeylGroup, out: *mut usize) -> RtStatus {
    guard(|| write_out(out, handle(g)?.group.num_classes()))
}

/// Class sizes in class order; `len` must be at least the number of classes.
///
/// # Safety
/// `buf` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn rt_group_class_sizes(g: *const RtWeylGroup, buf: *mut u64, len: usize) -> RtStatus {
    guard(|| {
        let sizes: Vec<u64> = handle(g)?.group.class_sizes().iter().map(|&s| s as u64).collect();
        write_slice(buf, len, &sizes)
    })
}

/// Representative of class `class_index` as a reduced word such as `"s1 s2"`
/// (`"e"` for the identity), NUL-terminated. `needed` receives the buffer
/// size including the terminator, even when `buf` is too small.
///
/// # Safety
/// `buf` must be valid for `len` writes; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn rt_group_class_word(
    g: *const RtWeylGroup,
    class_index: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> RtStatus {
    guard(|| {
        let group = &handle(g)?.group;
        let Some(c) = group.classes().get(class_index) else {
            return Err(Failure(RtStatus::InvalidArgument, format!("class {class_index} out of range")));
        };
        let word = group.element(c.representative).word_string();
        let bytes: Vec<c_char> = word.bytes().chain([0]).map(|b| b as c_char).collect();
        if !needed.is_null() {
            needed.write(bytes.len());
        }
        write_slice(buf, len, &bytes)
    })
}

/// Values of Lambda on each class, in class order. Computed once per handle.
///
/// # Safety
/// `buf` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn rt_group_lambda(g: *const RtWeylGroup, buf: *mut i64, len: usize) -> RtStatus {
    guard(|| {
        let h = handle(g)?;
        if h.lambda.get().is_none() {
            let values = lambda_main(&h.group)?.values().to_vec();
            let _ = h.lambda.set(values);
        }
        write_slice(buf, len, h.lambda.get().expect("set above"))
    })
}

/// Permutation character on `N/2N`, in class order.
///
/// # Safety
/// `buf` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn rt_group_pi_two(g: *const RtWeylGroup, buf: *mut i64, len: usize) -> RtStatus {
    guard(|| write_slice(buf, len, pi_two(&handle(g)?.group).values()))
}

/// Euler characteristic of the real toric variety, `sum_w (-1)^des(w)`.
///
/// # Safety
/// `g` must be a live handle and `out` valid for writing.
#[no_mangle]
pub unsafe extern "C" fn rt_group_euler_char(g: *const RtWeylGroup, out: *mut i64) -> RtStatus {
    guard(|| write_out(out, realtoric::coxeter_euler::euler_char_descents(&handle(g)?.group)))
}

/// Number of partitions of `n`, the length of `rt_lambda_typea` output.
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn rt_partition_count(n: u32, out: *mut usize) -> RtStatus {
    guard(|| {
        check_typea_n(n)?;
        write_out(out, partitions(n as usize).len())
    })
}

fn check_typea_n(n: u32) -> Result<(), Failure> {
    if n == 0 || n > RT_MAX_TYPEA_N {
        return Err(Failure(RtStatus::InvalidArgument, format!("n must be in 1..={RT_MAX_TYPEA_N}")));
    }
    Ok(())
}

/// Lambda for `S_n` by cycle type, partitions in reverse lexicographic
/// order (`n`, `n-1 + 1`, ..., `1 + ... + 1`).
///
/// # Safety
/// `buf` must be valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn rt_lambda_typea(n: u32, buf: *mut i64, len: usize) -> RtStatus {
    guard(|| {
        check_typea_n(n)?;
        write_slice(buf, len, lambda_typea(n as usize).values())
    })
}

/// Euler number `E_n` (zero for even `n`).
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn rt_euler_number(n: u32, out: *mut i64) -> RtStatus {
    guard(|| {
        if n > RT_MAX_EULER_N {
            return Err(Failure(RtStatus::InvalidArgument, format!("n must be at most {RT_MAX_EULER_N}")));
        }
        write_out(out, euler_number(n as usize))
    })
}
