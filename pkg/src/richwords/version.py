"""Single source for the tool version echoed in reports and cache files."""

TOOL_VERSION = "0.1.0"
