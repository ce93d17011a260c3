#!/usr/bin/env python3
"""
Development scripts for eoalg.
"""
import subprocess
import sys

TEST_FILES = ["tests.py", "test_integration.py", "test_properties.py"]


def run_tests():
    """Run the unit tests with unittest."""
    return subprocess.run([sys.executable, "-m", "unittest", "tests", "-v"])


def run_pytest():
    """Run every test file with pytest."""
    return subprocess.run([sys.executable, "-m", "pytest", "-v", *TEST_FILES])


def run_tests_with_coverage():
    """Run tests with pytest and coverage."""
    return subprocess.run([sys.executable, "-m", "pytest", "--cov=eoalg", *TEST_FILES])


def main():
    """Main entry point for scripts."""
    if len(sys.argv) < 2:
        print("Usage: python -m eoalg.scripts <command>")
        print("Commands:")
        print("  test       - Run unit tests with unittest")
        print("  pytest     - Run all tests with pytest")
        print("  test-cov   - Run tests with coverage")
        return 1

    command = sys.argv[1]

    if command == "test":
        return run_tests().returncode
    elif command == "pytest":
        return run_pytest().returncode
    elif command == "test-cov":
        return run_tests_with_coverage().returncode
    else:
        print(f"Unknown command: {command}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
