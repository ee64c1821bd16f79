name = "golaytools"
