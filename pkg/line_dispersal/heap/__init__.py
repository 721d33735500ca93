from .pairing import MeldHeap
