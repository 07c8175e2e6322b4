# Command-line front end for quadprime
