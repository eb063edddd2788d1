"""Error handling as a pair of conjoined monads.

Carriers indexed by an error type and a value type, monadic in both, with
throw and pure acting as left zeros of each other's sequencing operator.
"""

__version__ = "0.1.0"
