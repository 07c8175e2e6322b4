# Quadratic characters, prime-ideal norm sieve and prime atlases for quadratic fields
