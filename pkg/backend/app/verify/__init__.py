from app.verify.sweeps import check_addmult, check_cmult, check_exact_counts, check_widths, verify_field

__all__ = ["check_addmult", "check_cmult", "check_exact_counts", "check_widths", "verify_field"]
