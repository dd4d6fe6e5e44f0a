"""Service layer behind the syncideal command line: settings, payload schemas and services."""
