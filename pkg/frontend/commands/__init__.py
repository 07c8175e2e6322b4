# Subcommands of the quadprime command line
