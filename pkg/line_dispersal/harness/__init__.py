from .generation import Family, GenSpec, gen_instance
from .verification import VerifyFailure, VerifyReport, verify_batch
from .benchmark import BenchReport, BenchRow, bench
