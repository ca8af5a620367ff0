use std::ffi::CStr;
use std::ptr;

use realtoric_ffi::*;

fn group(family: u8, rank: u32) -> *mut RtWeylGroup {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { rt_group_new(family as _, rank, false, &mut g) }, RtStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> Option<String> {
    let p = rt_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn g2_handle() {
    let g = group(b'G', 2);
    unsafe {
        let mut order = 0u64;
        assert_eq!(rt_group_order(g, &mut order), RtStatus::Ok);
        assert_eq!(order, 12);
        let mut rank = 0u32;
        rt_group_rank(g, &mut rank);
        assert_eq!(rank, 2);

        let mut n = 0usize;
        assert_eq!(rt_group_num_classes(g, &mut n), RtStatus::Ok);
        let mut sizes = vec![0u64; n];
        assert_eq!(rt_group_class_sizes(g, sizes.as_mut_ptr(), n), RtStatus::Ok);
        assert_eq!(sizes.iter().sum::<u64>(), 12);

        let mut lambda = vec![0i64; n];
        assert_eq!(rt_group_lambda(g, lambda.as_mut_ptr(), n), RtStatus::Ok);
        let mut chi = 0i64;
        assert_eq!(rt_group_euler_char(g, &mut chi), RtStatus::Ok);
        assert_eq!(chi, -8);
        assert_eq!(lambda[0], chi);

        let mut pi = vec![0i64; n];
        assert_eq!(rt_group_pi_two(g, pi.as_mut_ptr(), n), RtStatus::Ok);
        assert_eq!(pi[0], 4);
        rt_group_free(g);
    }
}

#[test]
fn class_words() {
    let g = group(b'A', 2);
    unsafe {
        let mut needed = 0usize;
        let mut buf = [0 as std::ffi::c_char; 2];
        assert_eq!(rt_group_class_word(g, 0, buf.as_mut_ptr(), 2, &mut needed), RtStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "e");

        assert_eq!(rt_group_class_word(g, 2, buf.as_mut_ptr(), 2, &mut needed), RtStatus::BufferTooSmall);
        let mut big = vec![0 as std::ffi::c_char; needed];
        assert_eq!(rt_group_class_word(g, 2, big.as_mut_ptr(), needed, ptr::null_mut()), RtStatus::Ok);
        assert_eq!(CStr::from_ptr(big.as_ptr()).to_str().unwrap(), "s1 s2");

        assert_eq!(rt_group_class_word(g, 3, big.as_mut_ptr(), needed, ptr::null_mut()), RtStatus::InvalidArgument);
        rt_group_free(g);
    }
}

#[test]
fn error_codes_and_messages() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(rt_group_new(b'E' as _, 6, false, &mut g), RtStatus::E6Disabled);
        assert!(g.is_null());
        assert!(last_error().unwrap().contains("E_6"));
        assert_eq!(rt_group_new(b'D' as _, 3, false, &mut g), RtStatus::UnsupportedType);
        assert_eq!(rt_group_new(b'X' as _, 2, false, &mut g), RtStatus::UnsupportedType);
        assert_eq!(rt_group_new(b'A' as _, 9, false, &mut g), RtStatus::ResourceCap);
        assert_eq!(rt_group_new(b'A' as _, 2, false, ptr::null_mut()), RtStatus::NullPointer);
        assert_eq!(rt_group_order(ptr::null(), &mut 0), RtStatus::NullPointer);

        let h = group(b'B', 3);
        assert!(last_error().is_none());
        let mut small = [0u64; 2];
        assert_eq!(rt_group_class_sizes(h, small.as_mut_ptr(), 2), RtStatus::BufferTooSmall);
        assert!(last_error().unwrap().contains("need 10"));
        rt_group_free(h);
        rt_group_free(ptr::null_mut());
    }
}

#[test]
fn type_a_and_euler_numbers() {
    unsafe {
        let mut count = 0usize;
        assert_eq!(rt_partition_count(5, &mut count), RtStatus::Ok);
        assert_eq!(count, 7);
        let mut values = vec![0i64; count];
        assert_eq!(rt_lambda_typea(5, values.as_mut_ptr(), count), RtStatus::Ok);
        // last partition is 1+1+1+1+1, i.e. the identity
        assert_eq!(values[count - 1], 16);
        assert_eq!(rt_lambda_typea(0, values.as_mut_ptr(), count), RtStatus::InvalidArgument);
        assert_eq!(rt_lambda_typea(11, values.as_mut_ptr(), count), RtStatus::InvalidArgument);

        let mut e = 0i64;
        for (n, expected) in [(1, 1), (3, 2), (5, 16), (7, 272), (9, 7936), (4, 0)] {
            assert_eq!(rt_euler_number(n, &mut e), RtStatus::Ok);
            assert_eq!(e, expected, "E_{n}");
        }
        assert_eq!(rt_euler_number(RT_MAX_EULER_N, &mut e), RtStatus::Ok);
        assert!(e > 0);
        assert_eq!(rt_euler_number(RT_MAX_EULER_N + 1, &mut e), RtStatus::InvalidArgument);
    }
}
