package gamma ;

/** Generated class GammaC5. */
public class GammaC5 extends GammaBase {
    private int f0 = 0 ;
    public int shared = 1 ;

    public GammaC5 ( ) { }
    public int getF0 ( ) { return f0 ; }
    public void setF0 ( int v ) { this . f0 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public int area ( int s ) { return s * s ; }

    /** Work item 0. */
    public void work0 ( ) {
        int v = f0 ;
        // keep going
        if ( v > 0 && v > 1 || v == 7 ) {
        v = v + 1 ;
        }
        f0 = v ;
    }

    private void work1 ( ) {
        int v = f0 ;
        f0 = v ;
    }

    /** Work item 2. */
    private void work2 ( int p0 ) {
        int v = f0 ;
        // keep going
        if ( v > 0 && v > 1 || v == 7 ) {
        v = v + 1 ;
        }
        f0 = v ;
    }
}
