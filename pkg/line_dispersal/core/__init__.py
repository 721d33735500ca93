from .scalar import ScaledInt, format_scalar, parse_scalar
from .model import Configuration, ProblemInstance, normalize_instance, total_cost
from .chains import ChainView, decompose_chains
from .audit import AuditReport, audit
