from urvkit.cli import main

main()
