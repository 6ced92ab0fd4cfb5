# Core modules for quaddom
