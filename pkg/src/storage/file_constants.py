# CSV conventions
CSV_LINE_TERMINATOR = "\n"
CSV_FLOAT_FORMAT = ".17g"
