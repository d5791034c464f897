BUILTIN_BOOLEAN = "boolean"
BUILTIN_ZMOD = "zmod"
BUILTIN_TRUNCATED_NAT = "truncated_nat"
BUILTIN_MINPLUS_CHAIN = "minplus_chain"
BUILTIN_KINDS = (
    BUILTIN_BOOLEAN,
    BUILTIN_ZMOD,
    BUILTIN_TRUNCATED_NAT,
    BUILTIN_MINPLUS_CHAIN,
)

ZMOD_MIN_MODULUS = 2
CHAIN_MIN_LENGTH = 1

AXIOM_ADD_ASSOC = "+-assoc"
AXIOM_ADD_COMM = "+-comm"
AXIOM_ADD_IDENTITY = "+-identity"
AXIOM_MUL_ASSOC = "*-assoc"
AXIOM_MUL_COMM = "*-comm"
AXIOM_MUL_IDENTITY = "*-identity"
AXIOM_DISTRIB_LEFT = "distributivity-left"
AXIOM_DISTRIB_RIGHT = "distributivity-right"
AXIOM_ZERO_ABSORB = "0-absorption"
AXIOM_ONE_NOT_ZERO = "1!=0"
AXIOM_NAMES = (
    AXIOM_ADD_ASSOC,
    AXIOM_ADD_COMM,
    AXIOM_ADD_IDENTITY,
    AXIOM_MUL_ASSOC,
    AXIOM_MUL_COMM,
    AXIOM_MUL_IDENTITY,
    AXIOM_DISTRIB_LEFT,
    AXIOM_DISTRIB_RIGHT,
    AXIOM_ZERO_ABSORB,
    AXIOM_ONE_NOT_ZERO,
)

KIND_PRIME = "prime"
KIND_SEMIPRIME = "semiprime"
KIND_MAXIMAL = "maximal"
KIND_SEMIMAXIMAL = "semimaximal"
SPECTRUM_KINDS = (KIND_PRIME, KIND_SEMIPRIME, KIND_MAXIMAL, KIND_SEMIMAXIMAL)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

INFINITY_LABEL = "inf"
VARIABLE_PREFIX = "x"
NATURALS_KIND = "naturals"

SEARCH_DEFAULT_COUNT = 100
SEARCH_MIN_SIZE = 2
SEARCH_MAX_SIZE = 4
SEARCH_MUL_ATTEMPTS = 400
