"""Error type and error-code table shared by all computation modules."""

# Stable error codes; the CLI prints them and tests match on them.
ERROR_CODES = {
    "E100": "Invalid argument.",
    "E101": "Division by zero.",
    "E102": "Binomial order must be nonnegative.",
    "E103": "Malformed rational string.",
    "E110": "Genus mismatch or key outside the divisor basis.",
    "E111": "Unsupported pushforward.",
    "E112": "Canonical class formula requires g >= 4.",
    "E120": "Count formula requires rho = 0.",
    "E121": "Serre dual has negative projective dimension.",
    "E122": "Inconsistent Riemann-Roch input.",
    "E123": "Gonality k must be at least 3.",
    "E124": "Factorial quotient is not an integer.",
    "E130": "Chern class input must be homogeneous of degree 1.",
    "E131": "Unpushable monomial.",
    "E140": "Porteous requires equal ranks.",
    "E141": "Generator missing from pushforward table.",
    "E142": "Pipeline result disagrees with the factored form.",
    "E143": "Unknown degeneration component.",
    "E150": "Malformed resolution.",
    "E151": "Section-count guard violated.",
    "E152": "Resolution does not describe a surface.",
    "E160": "Degenerate divisor pair.",
    "E161": "Remark hypothesis violated: higher boundary coefficients must be checked.",
    "E162": "Certificate fields are inconsistent.",
    "E170": "Malformed JSON input.",
    "E171": "Malformed expected-value table.",
}


class ComputationError(ValueError):
    """A computation was asked something it cannot answer exactly.

    Args:
        code: Key of ``ERROR_CODES``
        detail: Context appended to the generic message
    """

    def __init__(self, code: str, detail: str | None = None):
        self.code = code
        self.detail = detail
        base = ERROR_CODES.get(code, "Computation error.")
        self.message = f"{base} {detail}" if detail else base
        super().__init__(f"{code}: {self.message}")
