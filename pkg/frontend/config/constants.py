"""
Configuration constants for the quadprime command line.
"""

# Exit codes
EXIT_MISMATCH = 1
EXIT_USAGE = 2

# Atlas defaults
DEFAULT_BOX = 40
DEFAULT_FORMAT = "svg"
DEFAULT_GALLERY_BOX = 20
ATLAS_FORMATS = ["svg", "text"]
SIEVE_FORMATS = ["list", "binary"]

# Character row width for the `character` subcommand and picture headers
DEFAULT_WIDTH = 64

# Verification
DEFAULT_VERIFY_MAX = 100_000
DEFAULT_VERIFY_BOX = 20

# Output file extensions by format
EXTENSIONS = {
    "svg": ".svg",
    "text": ".txt",
    "list": ".txt",
    "binary": ".qns",
}

# Keys accepted in a --config file (key=value lines)
RENDER_CONFIG_KEYS = [
    "cell_size",
    "color_unit",
    "color_prime",
    "color_ideal_i",
    "color_ideal_j",
    "color_other",
    "color_axes",
    "background",
    "show_character_row",
    "character_row_width",
]
