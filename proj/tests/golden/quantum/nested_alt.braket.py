unsupported: braket does not support conditional operations
