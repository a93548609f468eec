# frontend package
