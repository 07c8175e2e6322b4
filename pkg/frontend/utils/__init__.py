# Shared command-line helpers
