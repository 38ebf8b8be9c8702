# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

PRODUCT_NAME = "schubitope"
VERSION = "2026.1.0.0"

CONFIG_FILE_NAME = "%s.ini" % PRODUCT_NAME

FORMAT_JSON = "json"
FORMAT_TEXT = "text"
FORMAT_HFORM = "hform"

CHAIN_FIRST = "first"
CHAIN_LAST = "last"

ENUMERATOR_SWEEP = "sweep"
ENUMERATOR_SKYLINE = "skyline"

STATUS_PASS = "pass"
STATUS_FAIL = "fail"

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
