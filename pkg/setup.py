#!/usr/bin/env python3
"""
Setup script for quadprime.
Installs dependencies, checks the QUADPRIME_* settings and runs a small self-check.
"""
import subprocess
import sys
import logging

# Configure logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

SELF_CHECK_LIMIT = 2000


def run_command(command, description):
    """Run a command and handle errors."""
    logger.info(f"Running: {description}")
    try:
        subprocess.run(command, shell=True, check=True, capture_output=True, text=True)
        logger.info(f"✅ {description} completed successfully")
        return True
    except subprocess.CalledProcessError as e:
        logger.error(f"❌ {description} failed: {e}")
        logger.error(f"Error output: {e.stderr}")
        return False


def check_python_version():
    """Check if Python version is compatible."""
    if sys.version_info < (3, 11):
        logger.error("❌ Python 3.11 or higher is required")
        return False
    logger.info(f"✅ Python {sys.version.split()[0]} is compatible")
    return True


def install_dependencies():
    """Install Python dependencies."""
    return run_command("pip install -r requirements.txt", "Installing Python dependencies")


def check_environment():
    """Load QUADPRIME_* settings from the environment and .env."""
    try:
        from pydantic import ValidationError
        from backend.settings import get_settings

        settings = get_settings()
    except ValidationError as e:
        logger.error(f"❌ Invalid QUADPRIME_* settings: {e}")
        logger.error("Please fix your .env file (see .env.example)")
        return False

    logger.info(
        f"✅ Settings loaded: max_memory={settings.max_memory}, "
        f"segment_size={settings.segment_size}, log_level={settings.log_level}"
    )
    return True


def self_check():
    """Run the oracle comparison for the Gaussian integers on a small bound."""
    try:
        from backend.field import make_field
        from backend.verify import verify_field

        report = verify_field(make_field(-1), SELF_CHECK_LIMIT, box=5)
    except Exception as e:
        logger.error(f"❌ Self-check error: {e}")
        return False

    if not report.ok:
        for mismatch in report.mismatches[:5]:
            logger.error(f"❌ {mismatch.check}: {mismatch.witness}")
        return False
    logger.info("✅ Self-check passed")
    return True


def main():
    """Main setup function."""
    logger.info("🚀 Setting up quadprime")

    # Check Python version
    if not check_python_version():
        sys.exit(1)

    # Install dependencies
    if not install_dependencies():
        logger.error("Failed to install dependencies")
        sys.exit(1)

    # Check environment
    if not check_environment():
        logger.error("Please configure your environment variables first")
        sys.exit(1)

    # Verify the fast paths against the oracles
    if not self_check():
        logger.error("Self-check failed")
        sys.exit(1)

    logger.info("🎉 Setup completed successfully!")
    logger.info("You can now run the command line with: python -m frontend.app --help")


if __name__ == "__main__":
    main()
