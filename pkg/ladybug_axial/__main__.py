from ladybug_axial.cli import axial

if __name__ == '__main__':
    axial()
