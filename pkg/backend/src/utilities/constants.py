from enum import Enum


class ErrorMessages(Enum):
    DIMENSION_MISMATCH = "Dimension mismatch: expected {expected}, got {actual}"
    UNBOUNDED_POLYHEDRON = "The halfspace system is unbounded along direction {direction}"
    EMPTY_POLYHEDRON = "The halfspace system has no solution"
    DEGENERATE_HULL = "Points do not affinely span dimension {dimension}"

    NOT_FULL_DIMENSIONAL = "Rays span a subspace of dimension {rank}, expected {dimension}"
    NOT_STRICTLY_CONVEX = "The cone contains the line through {ray}"
    EMPTY_GENERATOR_SET = "A region needs at least one generator"
    GENERATOR_OUTSIDE_CONE = "Generator {point} lies outside the cone"
    CONE_MISMATCH = "Regions live in different cones"
    NOT_COBOUNDED = "Region is not cobounded: no generator on the extreme ray {ray}"
    TRUNCATION_TOO_SMALL = "Truncation {truncation} is below the coboundedness certificate {certificate}"

    ARITY = "Expected {expected} arguments, got {actual}"
    FIT_MISMATCH = "Fitted polynomial gives {fitted} at {point}, sampled value is {sampled}"

    ALPHA_OUTSIDE_SEMIGROUP = "Exponent {alpha} is not a lattice point of the cone"
    EMPTY_IDEAL = "An ideal needs at least one generator"
    NOT_M_PRIMARY = "Ideal is not m-primary: its Newton region misses the extreme ray {ray}"
    SEMIGROUP_MISMATCH = "Ideals live in different semigroups"
    NEGATIVE_POWER = "Ideal powers need a nonnegative exponent, got {exponent}"
    NO_STABILIZATION = "The {order}-th difference of the Hilbert-Samuel function did not stabilize up to k = {cap}"
    NON_INTEGER_RESULT = "Mixed multiplicity evaluated to the non-integer {value}"
    STAIRCASE_CAP = "Staircase exploration exceeded {cap} points"
    ENCODING_RANGE = "Staircase exploration reached level {level}, beyond the exact key range"
    UNIT_IDEAL_MIXED = "Mixed multiplicities need proper ideals, got the unit ideal"
    NON_POSITIVE_RESULT = "Mixed multiplicity evaluated to {value}, expected a positive integer"

    GENERATION_FAILED = "Could not generate an instance for seed {seed} after {attempts} attempts"

    PROBLEM_FILE_UNREADABLE = "Cannot read problem file {path}: {reason}"
    UNKNOWN_REGION = "Region '{name}' is not defined in the problem file"
    UNKNOWN_IDEAL = "Ideal '{name}' is not defined in the problem file"
    INVALID_RATIONAL = "'{text}' is not a rational number of the form p or p/q"
