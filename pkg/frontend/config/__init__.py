# Command-line configuration module
