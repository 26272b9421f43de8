#!/usr/bin/env python3
"""
Hom complex toolkit - Main Entry Point
"""
import sys

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
